from itertools import product

import pytest

from templex.necklace import (
    Necklace,
    compose_maps,
    enumerate_necklaces,
    enumerate_neckmaps,
)
from templex.simplexcat import enumerate_maps
from templex.sset import (
    Bipointed,
    FinSimpSet,
    NecRestriction,
    SimpCat,
    SimpSetError,
    boundary,
    classical_hc_nerve,
    classical_rigidify,
    discrete_simp_cat,
    enumerate_simplicial_maps,
    horn,
    inner_horn_report,
    is_discrete,
    nerve_of_finite_category,
    nerve_of_poset,
    path_length_bound,
    restrict_to_nec,
    simp_iso,
    simp_product,
    sset_is_quasicategory,
    standard_simplex,
)
from templex.sset import _interval_poset_nerve


# -- construction and structure maps ----------------------------------------


def test_standard_simplex_cell_counts():
    d3 = standard_simplex(3)
    assert [len(d3.cells[n]) for n in range(4)] == [4, 10, 20, 35]
    assert [len(d3.nondegenerate(n)) for n in range(4)] == [4, 6, 4, 1]


def test_simplicial_identities_are_validated():
    d2 = standard_simplex(2)
    face = {k: dict(v) for k, v in d2.face.items()}
    face[(1, 0)][(0, 1)] = (0,)  # d_0 of the edge 0->1 is the vertex 1, not 0
    with pytest.raises(SimpSetError):
        FinSimpSet(2, d2.cells, face, d2.degen)


def test_action_is_precomposition():
    # a cell of a standard simplex is a monotone tuple, and the simplicial
    # action must agree with composing those tuples as maps
    d3 = standard_simplex(3)
    for m in range(4):
        for n in range(4):
            for g in enumerate_maps(m, n):
                for x in d3.cells[n]:
                    expected = tuple(x[g(t)] for t in range(m + 1))
                    assert d3.act(g, x) == expected


def test_vertex_extraction():
    d3 = standard_simplex(3)
    assert d3.vertex(2, (0, 1, 3), 0) == (0,)
    assert d3.vertex(2, (0, 1, 3), 1) == (1,)
    assert d3.vertex(2, (0, 1, 3), 2) == (3,)


def test_eilenberg_zilber_breakdown():
    # the 20 two-cells of the 3-simplex split by the dimension of their
    # non-degenerate core: 4 genuine triangles, 12 over edges, 4 over points
    d3 = standard_simplex(3)
    by_core = {0: 0, 1: 0, 2: 0}
    for x in d3.cells[2]:
        surj, z = d3.ez_decompose(2, x)
        assert not d3.is_degenerate(surj.cod, z)
        assert d3.act(surj, z) == x
        by_core[surj.cod] += 1
    assert by_core == {0: 4, 1: 12, 2: 4}


def test_ez_roundtrip_everywhere():
    d3 = standard_simplex(3)
    for n in range(4):
        for x in d3.cells[n]:
            surj, z = d3.ez_decompose(n, x)
            assert d3.act(surj, z) == x


def test_horn_and_boundary_cells():
    h = horn(2, 1)
    assert set(h.nondegenerate(1)) == {(0, 1), (1, 2)}
    assert h.nondegenerate(2) == ()
    b = boundary(1)
    assert len(b.cells[0]) == 2
    assert b.nondegenerate(1) == ()
    with pytest.raises(SimpSetError):
        horn(2, 5)


def test_json_roundtrip():
    d2 = standard_simplex(2, 3)
    assert FinSimpSet.from_json(d2.to_json()) == d2
    named = nerve_of_poset(("a", "b"), lambda x, y: x == y or (x, y) == ("a", "b"), 2)
    assert FinSimpSet.from_json(named.to_json()) == named


def test_bipointed_rejects_non_vertices():
    with pytest.raises(SimpSetError):
        Bipointed(standard_simplex(1), 0, (1,))


# -- nerves, products, isomorphism -------------------------------------------


def test_poset_nerve_of_a_chain_is_a_simplex():
    ch = nerve_of_poset((0, 1), lambda a, b: a <= b, 2)
    assert simp_iso(ch, standard_simplex(1, 2))


def test_poset_nerve_validates_order_axioms():
    with pytest.raises(SimpSetError):
        nerve_of_poset((0, 1), lambda a, b: a != b, 1)  # not reflexive
    with pytest.raises(SimpSetError):
        nerve_of_poset((0, 1, 2), lambda a, b: (b - a) % 3 <= 1, 1)  # not antisym


def test_interval_subset_poset_is_a_square():
    # subsets of {0,..,3} containing both endpoints: four of them, ordered
    # by inclusion, with nerve a product of two intervals
    N = _interval_poset_nerve(0, 3, 2)
    assert len(N.cells[0]) == 4
    square = simp_product(standard_simplex(1, 2), standard_simplex(1, 2))
    assert simp_iso(N, square)


def test_simp_iso_rejects_different_complexes():
    assert not simp_iso(standard_simplex(1, 2), boundary(1, 2))


def test_enumerate_simplicial_maps_counts():
    # maps d1 -> d2 correspond to monotone pairs from [1] to [2]: six
    maps = enumerate_simplicial_maps(standard_simplex(1, 2), standard_simplex(2, 2))
    assert len(maps) == 6


def test_discreteness_certificate():
    assert is_discrete(standard_simplex(0, 3))
    assert not is_discrete(standard_simplex(2))


# -- quasi-category reports ---------------------------------------------------


def test_poset_nerve_fills_inner_horns_uniquely():
    ch = nerve_of_poset((0, 1, 2), lambda a, b: a <= b, 3)
    fills, unique, witness = sset_is_quasicategory(ch, 3)
    assert fills and unique and witness is None
    assert all(count == 1 for (_, _, _, count) in inner_horn_report(ch, 3))


def test_inner_horn_itself_is_not_a_quasicategory():
    fills, _, witness = sset_is_quasicategory(horn(2, 1), 2)
    assert not fills
    n, j, ys, count = witness
    assert (n, j, count) == (2, 1, 0)


# -- necklace restrictions ----------------------------------------------------


def all_necklaces(p_max):
    return [T for p in range(p_max + 1) for T in enumerate_necklaces(p)]


def test_outer_horn_restriction_collapses():
    # the 0-th horn of the triangle, pointed at (0, 2), restricts exactly
    # like the interval pointed at its endpoints
    R = restrict_to_nec(Bipointed(horn(2, 0, 3), (0,), (2,)))
    R1 = restrict_to_nec(Bipointed(standard_simplex(1, 3), (0,), (1,)))
    for T in all_necklaces(3):
        if T.p >= 1:
            assert len(R.at(T)) == len(R1.at(T))


def test_simplex_restriction_at_one_bead():
    R = restrict_to_nec(Bipointed(standard_simplex(3), (0,), (3,)))
    pts = R.at(Necklace((0, 3), 3))
    assert len(pts) == 10
    base = standard_simplex(3)
    nondeg = [z for z in pts if not base.is_degenerate(3, z[0])]
    assert nondeg == [((0, 1, 2, 3),)]


def test_horn_restriction_frozen_count():
    R = restrict_to_nec(Bipointed(horn(3, 1), (0,), (3,)))
    assert len(R.at(Necklace((0, 1, 3), 3))) == 9


def test_restriction_is_contravariantly_functorial():
    R = restrict_to_nec(Bipointed(horn(3, 1), (0,), (3,)))
    necks = all_necklaces(3)
    for T in necks:
        points = R.at(T)
        if not points:
            continue
        for U in necks:
            for f in enumerate_neckmaps(U, T):
                moved = [R.act(f, z) for z in points]
                for V in necks:
                    for g in enumerate_neckmaps(V, U):
                        gf = compose_maps(g, f)
                        for z, fz in zip(points, moved):
                            assert R.act(g, fz) == R.act(gf, z)


def test_restriction_rejects_oversized_beads():
    R = restrict_to_nec(Bipointed(horn(2, 0), (0,), (2,)))
    with pytest.raises(SimpSetError):
        R.at(Necklace((0, 3), 3))


# -- classical rigidification --------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rigidified_simplex_is_a_cube_nerve(n):
    bip = Bipointed(standard_simplex(n, max(n, 4)), (0,), (n,))
    C = classical_rigidify(bip, 3)
    assert [len(C.cells[m]) for m in range(4)] == [(m + 2) ** (n - 1) for m in range(4)]
    assert simp_iso(C, _interval_poset_nerve(0, n, 3))


def test_rigidified_point_is_a_point():
    bip = Bipointed(standard_simplex(0, 2), (0,), (0,))
    assert simp_iso(classical_rigidify(bip, 2), standard_simplex(0, 2))


def test_rigidified_inner_horn_has_one_composable_pair():
    bip = Bipointed(horn(2, 1), (0,), (2,))
    C = classical_rigidify(bip, 1)
    assert len(C.cells[0]) == 1
    (label,) = C.cells[0]
    joints, point, chain = label
    assert joints == (0, 1, 2)
    assert point == ((0, 1), (1, 2))


def test_rigidify_cell_counts_for_interior_endpoints():
    for n in range(1, 5):
        X = standard_simplex(n, max(n, 3))
        for i in range(n):
            for j in range(i + 1, n + 1):
                C = classical_rigidify(Bipointed(X, (i,), (j,)), 2)
                got = [len(C.cells[m]) for m in range(3)]
                assert got == [(m + 2) ** (j - i - 1) for m in range(3)]


def test_path_length_bound_and_cycles():
    assert path_length_bound(Bipointed(standard_simplex(3), (0,), (3,))) == 3
    # a non-degenerate loop admits necklaces of unbounded total length,
    # so automatic budgeting refuses and an explicit budget is required
    loop = FinSimpSet(
        1,
        {0: ("v",), 1: ("e", "sv")},
        {(1, 0): {"e": "v", "sv": "v"}, (1, 1): {"e": "v", "sv": "v"}},
        {(0, 0): {"v": "sv"}},
    )
    bip = Bipointed(loop, "v", "v")
    with pytest.raises(SimpSetError):
        classical_rigidify(bip, 1)
    C = classical_rigidify(bip, 1, bead_budget=2)
    assert len(C.cells[0]) >= 1


def test_horn_restrictions_decompose_as_unions():
    # inner-horn points are exactly the simplex points that factor through
    # an inner face or through a wedge of two smaller simplices
    for n in range(2, 5):
        D = max(n, 4)
        full = restrict_to_nec(Bipointed(standard_simplex(n, D), (0,), (n,)))
        for j in range(1, n):
            R = restrict_to_nec(Bipointed(horn(n, j, D), (0,), (n,)))
            for T in all_necklaces(4):
                if T.p < 1 or max(T.beads()) > D:
                    continue
                pts = full.at(T)
                union = set()
                for i in range(1, n):
                    if i != j:
                        union |= {
                            z for z in pts if all(i not in set(c) for c in z)
                        }
                for k in range(1, n):
                    lo, hi = set(range(k + 1)), set(range(k, n + 1))
                    union |= {
                        z
                        for z in pts
                        if all(set(c) <= lo or set(c) <= hi for c in z)
                    }
                assert set(R.at(T)) == union


# -- simplicial categories and the coherent nerve ------------------------------


def _empty_sset(D):
    return FinSimpSet(
        D,
        {n: () for n in range(D + 1)},
        {(n, k): {} for n in range(1, D + 1) for k in range(n + 1)},
        {(n, k): {} for n in range(D) for k in range(n + 1)},
    )


def _constant_sset(label, D):
    return FinSimpSet(
        D,
        {n: (label,) for n in range(D + 1)},
        {(n, k): {label: label} for n in range(1, D + 1) for k in range(n + 1)},
        {(n, k): {label: label} for n in range(D) for k in range(n + 1)},
    )


def test_one_object_point_homs():
    point = standard_simplex(0, 3)
    C = SimpCat(
        ("*",),
        {("*", "*"): point},
        lambda A, B, Cc, n, x, y: (0,) * (n + 1),
        {"*": (0,)},
    )
    N = classical_hc_nerve(C, 4)
    assert [len(N.cells[n]) for n in range(5)] == [1, 1, 1, 1, 1]
    assert is_discrete(N)


def _arrow_category_data():
    objects = ("x", "y")
    homsets = {
        ("x", "x"): ("1x",),
        ("y", "y"): ("1y",),
        ("x", "y"): ("f",),
        ("y", "x"): (),
    }

    def comp(A, B, C, f, g):
        if f == f"1{A}":
            return g
        if g == f"1{C}":
            return f
        raise AssertionError("no non-trivial composites here")

    return objects, homsets, comp, {"x": "1x", "y": "1y"}


def test_discrete_category_coherent_nerve_is_plain_nerve():
    objects, homsets, comp, ids = _arrow_category_data()
    C = discrete_simp_cat(objects, homsets, comp, ids, 3)
    N = classical_hc_nerve(C, 4)
    plain = nerve_of_finite_category(objects, homsets, comp, ids, 4)
    assert [len(N.cells[n]) for n in range(5)] == [2, 3, 4, 5, 6]
    assert simp_iso(N, plain)


def test_two_cells_are_edges_to_the_composite():
    # hom(0, 2) is an interval from h to gf; a 2-cell of the coherent nerve
    # over (0, 1, 2) picks an edge ending at the composite gf
    h_edge = nerve_of_poset(
        ("h", "gf"), lambda a, b: a == b or (a, b) == ("h", "gf"), 2
    )
    point = standard_simplex(0, 2)
    hom = {}
    for i in range(3):
        for j in range(3):
            if i == j:
                hom[(i, j)] = point
            elif (i, j) == (0, 2):
                hom[(i, j)] = h_edge
            elif i < j:
                hom[(i, j)] = _constant_sset(f"a{i}{j}", 2)
            else:
                hom[(i, j)] = _empty_sset(2)

    def comp(A, B, C, n, x, y):
        if A == B:
            return y
        if B == C:
            return x
        return ("gf",) * (n + 1)

    C3 = SimpCat(tuple(range(3)), hom, comp, {i: (0,) for i in range(3)})
    N = classical_hc_nerve(C3, 2)
    fillers = [lab for lab in N.cells[2] if lab[0] == (0, 1, 2)]
    sigma_edges = sorted(lab[1][1][1][1] for lab in fillers)
    assert sigma_edges == [("gf", "gf"), ("h", "gf")]


def test_hc_nerve_requires_enough_truncation():
    objects, homsets, comp, ids = _arrow_category_data()
    C = discrete_simp_cat(objects, homsets, comp, ids, 1)
    with pytest.raises(SimpSetError):
        classical_hc_nerve(C, 3)
