import pytest

from templex.cosmos import (
    CapabilityError,
    CosmosError,
    FGAb,
    FGAbMor,
    FinSet,
    FinVect,
    cosmos_by_name,
)

SET = FinSet()
VEC = FinVect(2)
AB = FGAb()


# -- objects and morphisms -----------------------------------------------------


def test_fgab_normal_form_enforced():
    with pytest.raises(CosmosError):
        AB.obj(0, [3, 2])  # 3 does not divide 2
    with pytest.raises(CosmosError):
        AB.obj(0, [1])


def test_fgab_morphism_well_definedness():
    # Z/2 -> Z sending the generator to 1 is not a homomorphism
    with pytest.raises(CosmosError):
        AB.mor(AB.obj(0, [2]), AB.obj(1), [[1]])
    # but Z/2 -> Z/4 by 2 is
    AB.mor(AB.obj(0, [2]), AB.obj(0, [4]), [[2]])


def test_fgab_morphisms_compared_mod_target_orders():
    f = AB.mor(AB.obj(1), AB.obj(0, [2]), [[3]])
    g = AB.mor(AB.obj(1), AB.obj(0, [2]), [[1]])
    assert f == g


def test_finvect_entries_reduced():
    f = VEC.mor(VEC.obj(1), VEC.obj(1), [[3]])
    assert f.matrix == ((1,),)


# -- tensor --------------------------------------------------------------------


def test_tensor_unit_is_iso_all_instances():
    for cosmos, A in [
        (SET, SET.free(["a", "b", "c"])),
        (VEC, VEC.obj(3)),
        (AB, AB.obj(1, [2])),
    ]:
        ins = cosmos.unit_insertion([A], [0])
        assert ins.src == A
        assert ins.dst == cosmos.tensor(cosmos.unit(), A)
        assert cosmos.is_iso(ins)
        back = cosmos.invert(ins)
        assert cosmos.compose(ins, back) == cosmos.identity(A)


def test_finvect_tensor_dim_product():
    assert VEC.tensor(VEC.obj(2), VEC.obj(3)).dim == 6


def test_fgab_tensor_torsion():
    assert AB.tensor(AB.obj(0, [2]), AB.obj(0, [3])) == AB.obj(0)
    assert AB.tensor(AB.obj(0, [2]), AB.obj(0, [4])) == AB.obj(0, [2])
    assert AB.tensor(AB.obj(1, [2]), AB.obj(1, [2])) == AB.obj(1, [2, 2, 2])


def test_tensor_mor_functorial():
    # (f;f') tensor (g;g') == (f tensor g) ; (f' tensor g')
    A, B = SET.free(["a", "b"]), SET.free(["x", "y"])
    f = SET.free_mor(["a", "b"], ["a", "b"], {"a": "b", "b": "b"})
    g = SET.free_mor(["x", "y"], ["x", "y"], {"x": "y", "y": "x"})
    lhs = SET.tensor_mor(SET.compose(f, f), SET.compose(g, g))
    rhs = SET.compose(SET.tensor_mor(f, g), SET.tensor_mor(f, g))
    assert lhs == rhs


def test_fgab_tensor_mor_multiplication():
    # tensoring 2: Z -> Z with 3: Z -> Z is 6: Z -> Z
    two = AB.mor(AB.obj(1), AB.obj(1), [[2]])
    three = AB.mor(AB.obj(1), AB.obj(1), [[3]])
    assert AB.tensor_mor(two, three).matrix == ((6,),)


def test_regroup_is_iso():
    for cosmos, objs in [
        (SET, [SET.free(["a", "b"]), SET.free(["x"]), SET.free(["u", "v"])]),
        (VEC, [VEC.obj(2), VEC.obj(1), VEC.obj(3)]),
        (AB, [AB.obj(1), AB.obj(0, [2]), AB.obj(0, [4])]),
    ]:
        r = cosmos.regroup(objs, [[0, 1], [2]])
        assert cosmos.is_iso(r)
        assert r.src == cosmos.tensor_many(objs)
        assert r.dst == cosmos.tensor(
            cosmos.tensor(objs[0], objs[1]), objs[2]
        )


def test_regroup_finset_table():
    A, B = SET.free(["a", "b"]), SET.free(["x", "y"])
    r = SET.regroup([A, B], [[0, 1]])
    # one block of size two: the regrouping is the identity relabeling
    assert r.src == r.dst
    assert SET.is_iso(r)


# -- coproducts, limits, coequalizers ------------------------------------------


def test_empty_coproduct_is_initial():
    assert SET.coproduct([]).obj.elements == ()
    assert VEC.coproduct([]).obj.dim == 0
    assert AB.coproduct([]).obj == AB.obj(0)


def test_coproduct_universal_property():
    for cosmos, objs, target in [
        (SET, [SET.free(["a"]), SET.free(["x", "y"])], SET.free(["q", "r"])),
        (VEC, [VEC.obj(1), VEC.obj(2)], VEC.obj(2)),
        (AB, [AB.obj(0, [2]), AB.obj(1)], AB.obj(0, [4])),
    ]:
        cop = cosmos.coproduct(objs)
        if cosmos is SET:
            legs = [
                SET.free_mor(["a"], ["q", "r"], {"a": "r"}),
                SET.free_mor(["x", "y"], ["q", "r"], {"x": "q", "y": "q"}),
            ]
        elif cosmos is VEC:
            legs = [VEC.mor(objs[0], target, [[1], [0]]),
                    VEC.mor(objs[1], target, [[0, 1], [1, 1]])]
        else:
            legs = [AB.mor(objs[0], target, [[2]]), AB.mor(objs[1], target, [[1]])]
        h = cop.copair(legs)
        for inj, leg in zip(cop.injections, legs):
            assert cosmos.compose(inj, h) == leg


def test_fgab_coproduct_renormalizes():
    cop = AB.coproduct([AB.obj(0, [2]), AB.obj(0, [3])])
    assert cop.obj == AB.obj(0, [6])


def test_is_iso_z6_against_sum():
    cop = AB.coproduct([AB.obj(0, [2]), AB.obj(0, [3])])
    i1, i2 = cop.injections
    rows = [[i1.matrix[r][0] + i2.matrix[r][0]] for r in range(cop.obj.ngen)]
    f = AB.mor(AB.obj(0, [6]), cop.obj, rows)
    assert AB.is_iso(f)


def test_finset_pullback_of_injections_is_intersection():
    i1 = SET.free_mor(["a", "b"], ["x", "y", "z"], {"a": "x", "b": "y"})
    i2 = SET.free_mor(["u", "v"], ["x", "y", "z"], {"u": "y", "v": "z"})
    pb = SET.pullback(i1, i2)
    assert SET.u_size(pb.obj) == 1  # only y is hit by both
    pa, pb_ = pb.projections
    x = next(iter(SET.u_elements(pb.obj)))
    assert SET.compose(x, SET.compose(pa, i1)) == SET.compose(x, SET.compose(pb_, i2))


def test_limit_mediator_roundtrip():
    # cone into the kernel-style limit of 2: Z -> Z against 3: Z -> Z
    two = AB.mor(AB.obj(1), AB.obj(1), [[2]])
    three = AB.mor(AB.obj(1), AB.obj(1), [[3]])
    pb = AB.pullback(two, three)
    assert pb.obj == AB.obj(1)
    legs = [AB.mor(AB.obj(1), AB.obj(1), [[3]]), AB.mor(AB.obj(1), AB.obj(1), [[2]])]
    med = pb.mediate(legs)
    for proj, leg in zip(pb.projections, legs):
        assert AB.compose(med, proj) == leg


def test_equalizer_fgab_kernel_inside_torsion():
    # kernel of 2: Z/4 -> Z/4 is Z/2, included by multiplication by 2
    Z4 = AB.obj(0, [4])
    two = AB.mor(Z4, Z4, [[2]])
    eq = AB.equalizer(two, AB.zero_mor(Z4, Z4))
    assert eq.obj == AB.obj(0, [2])
    assert eq.projections[0].matrix == ((2,),)


def test_equalizer_mediator_rejects_non_cone():
    Z = AB.obj(1)
    two = AB.mor(Z, Z, [[2]])
    eq = AB.equalizer(two, AB.zero_mor(Z, Z))
    assert eq.obj == AB.obj(0)
    with pytest.raises(CosmosError):
        eq.mediate([AB.identity(Z)])


def test_reflexive_coequalizer_fgab_cokernel():
    Z = AB.obj(1)
    pair = AB.coproduct([Z, Z])
    d0 = pair.copair([AB.identity(Z), AB.mor(Z, Z, [[2]])])
    d1 = pair.copair([AB.identity(Z), AB.zero_mor(Z, Z)])
    coeq = AB.reflexive_coequalizer(d0, d1, pair.injections[0])
    assert coeq.obj == AB.obj(0, [2])
    h = AB.mor(Z, AB.obj(0, [2]), [[1]])
    g = coeq.mediate(h)
    assert AB.compose(coeq.quotient, g) == h


def test_reflexive_coequalizer_finset_quotient():
    Y0 = SET.free(["a", "b", "c"])
    Y1 = SET.free(["a", "b", "c", "glue"])
    d0 = SET.free_mor(Y1.elements, Y0.elements, {"a": "a", "b": "b", "c": "c", "glue": "a"})
    d1 = SET.free_mor(Y1.elements, Y0.elements, {"a": "a", "b": "b", "c": "c", "glue": "b"})
    s0 = SET.free_mor(Y0.elements, Y1.elements, {"a": "a", "b": "b", "c": "c"})
    coeq = SET.reflexive_coequalizer(d0, d1, s0)
    assert SET.u_size(coeq.obj) == 2
    assert coeq.quotient.table[0] == coeq.quotient.table[1]


def test_reflexive_coequalizer_rejects_non_section():
    Y0 = SET.free(["a", "b"])
    Y1 = SET.free(["u"])
    d = SET.free_mor(["u"], ["a", "b"], {"u": "a"})
    s = SET.free_mor(["a", "b"], ["u"], {"a": "u", "b": "u"})
    with pytest.raises(CosmosError):
        SET.reflexive_coequalizer(d, d, s)


# -- points and exactness-free checks ------------------------------------------


def test_u_elements_of_unit():
    assert len(list(SET.u_elements(SET.unit()))) == 1
    assert len(list(VEC.u_elements(VEC.unit()))) == 2  # F_2 has two points
    with pytest.raises(CapabilityError):
        list(AB.u_elements(AB.unit()))  # Z has infinitely many


def test_u_elements_counts():
    assert len(list(VEC.u_elements(VEC.obj(3)))) == 8
    assert len(list(AB.u_elements(AB.obj(0, [2, 4])))) == 8
    assert AB.u_size(AB.obj(0, [2, 4])) == 8


def test_u_surjective_finvect_row():
    f = VEC.mor(VEC.obj(2), VEC.obj(1), [[1, 1]])
    assert VEC.u_surjective(f)
    assert not VEC.u_injective(f)


def test_u_surjective_fgab_doubling():
    two = AB.mor(AB.obj(1), AB.obj(1), [[2]])
    assert not AB.u_surjective(two)
    assert AB.u_injective(two)


# -- complements ---------------------------------------------------------------


def test_complement_finset_subset():
    m = SET.free_mor(["a"], ["x", "y", "z"], {"a": "y"})
    c = SET.complement(m)
    assert c.obj.elements == ("x", "z")
    assert SET.is_iso(c.iso)
    assert SET.compose(c.coproduct.injections[0], c.iso) == m


def test_complement_finvect_subspace():
    m = VEC.mor(VEC.obj(1), VEC.obj(3), [[1], [1], [0]])
    c = VEC.complement(m)
    assert c.obj.dim == 2
    assert VEC.is_iso(c.iso)
    assert VEC.compose(c.coproduct.injections[0], c.iso) == m


def test_complement_2z_in_z_does_not_exist():
    m = AB.mor(AB.obj(1), AB.obj(1), [[2]])
    assert AB.complement(m) is None


def test_complement_z2_in_z4_does_not_exist():
    m = AB.mor(AB.obj(0, [2]), AB.obj(0, [4]), [[2]])
    assert AB.complement(m) is None


def test_complement_split_summand_exists():
    cop = AB.coproduct([AB.obj(0, [2]), AB.obj(0, [4])])
    c = AB.complement(cop.injections[0])
    assert c is not None
    assert c.obj == AB.obj(0, [4])
    assert AB.is_iso(c.iso)
    assert AB.compose(c.coproduct.injections[0], c.iso) == cop.injections[0]


def test_complement_rejects_non_mono():
    f = SET.free_mor(["a", "b"], ["x"], {"a": "x", "b": "x"})
    with pytest.raises(CosmosError):
        SET.complement(f)


# -- free/forgetful ------------------------------------------------------------


def test_free_of_empty_is_initial():
    assert SET.is_initial(SET.free([]))
    assert VEC.is_initial(VEC.free([]))
    assert AB.is_initial(AB.free([]))


def test_free_finvect_dim():
    assert VEC.free(["a", "b"]) == VEC.obj(2)


def test_adjunction_triangle_finset():
    # counit of F -| U composed with F(unit) is the identity on F(S)
    from templex.cosmos import FinSetMor

    for size in range(5):
        labels = [f"s{i}" for i in range(size)]
        FS = SET.free(labels)
        points = list(SET.u_elements(FS))
        cop = SET.coproduct([SET.unit()] * len(points))
        # F(U(F(S))) realized as a coproduct of units; the counit copairs points
        counit = cop.copair(points)
        # the unit of the adjunction sends the label s_i to the i-th point
        feta = FinSetMor(FS, cop.obj, tuple(range(len(points))))
        assert SET.compose(feta, counit) == SET.identity(FS)


def test_adjunction_triangle_finvect():
    A = VEC.obj(2)
    points = list(VEC.u_elements(A))
    cop = VEC.coproduct([VEC.unit()] * len(points))
    counit = cop.copair(points)
    # unit of the adjunction on the basis: e_i to the point equal to e_i
    eta_cols = [points.index(VEC.mor(VEC.unit(), A, [[int(i == r)] for r in range(2)]))
                for i in range(2)]
    feta = VEC.mor(A, cop.obj, [[int(r == c) for c in eta_cols] for r in range(cop.obj.dim)])
    assert VEC.compose(feta, counit) == VEC.identity(A)


def test_tensor_distributes_over_coproduct():
    for cosmos, A, B, C in [
        (SET, SET.free(["a", "b"]), SET.free(["x"]), SET.free(["u", "v"])),
        (VEC, VEC.obj(2), VEC.obj(1), VEC.obj(3)),
        (AB, AB.obj(0, [2]), AB.obj(1), AB.obj(0, [4])),
    ]:
        cop = cosmos.coproduct([B, C])
        left = cosmos.coproduct([cosmos.tensor(A, B), cosmos.tensor(A, C)])
        legs = [
            cosmos.tensor_mor(cosmos.identity(A), cop.injections[0]),
            cosmos.tensor_mor(cosmos.identity(A), cop.injections[1]),
        ]
        canonical = left.copair(legs)
        assert cosmos.is_iso(canonical)


# -- misc ----------------------------------------------------------------------


def test_pair_elements():
    A = SET.free(["a", "b"])
    x = list(SET.u_elements(A))[1]
    paired = SET.pair_elements([x, x])
    assert paired.src == SET.unit()
    assert paired.dst == SET.tensor(A, A)
    assert paired(("*")) == ("b", "b")


def test_cosmos_by_name():
    assert cosmos_by_name("finset").name == "finset"
    assert cosmos_by_name("finvect", 3).p == 3
    assert cosmos_by_name("fgab").name == "fgab"
    with pytest.raises(CosmosError):
        cosmos_by_name("nope")


def test_obj_json_roundtrip():
    A = SET.free(["a", "b"])
    assert SET.obj_from_json(SET.obj_to_json(A)) == A
    B = VEC.obj(3)
    assert VEC.obj_from_json(VEC.obj_to_json(B)) == B
    C = AB.obj(1, [2, 4])
    assert AB.obj_from_json(AB.obj_to_json(C)) == C


def test_capability_flags_present():
    for cosmos in (SET, VEC, AB):
        assert cosmos.u_faithful
        assert cosmos.u_preserves_reflexive_coequalizers
        assert cosmos.u_reflects_reflexive_coequalizers
    assert SET.certified_cosmos and not AB.certified_cosmos


@pytest.mark.parametrize("cosmos", [SET, VEC, AB], ids=lambda c: c.name)
def test_basis_and_copair_free_are_mutually_inverse(cosmos):
    labels = ["u", "v", "w"]
    A = cosmos.free(labels)
    points = {x: cosmos.basis_element(labels, x) for x in labels}
    assert cosmos.copair_free(labels, points, A) == cosmos.identity(A)
    collapse = cosmos.copair_free(labels, {x: points["v"] for x in labels}, A)
    for x in labels:
        assert cosmos.compose(points[x], collapse) == points["v"]


@pytest.mark.parametrize("cosmos", [SET, VEC, AB], ids=lambda c: c.name)
def test_mor_json_roundtrip(cosmos):
    labels = ["u", "v", "w"]
    A = cosmos.free(labels)
    f = cosmos.free_mor(labels, labels, {"u": "v", "v": "v", "w": "u"})
    payload = cosmos.mor_to_json(f)
    assert cosmos.mor_from_json(A, A, payload) == f
