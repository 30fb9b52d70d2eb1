"""Hand-built templicial objects exercising behaviour free objects cannot.

Two constructions live here.  ``doubling_object`` is the smallest
templicial object whose degenerate simplices fail to split off: one
vertex, every level the integers, and the lone degeneracy X_0 -> X_1
acting by multiplication by two, so its image 2Z has no direct
complement in Z.  ``w_extension`` glues two hollow triangles along their
long edge and freely adds a single 2-simplex w filling both at once;
its comultiplication mu_{1,1}(w) = f1 (x) g1 + f2 (x) g2 is not a pure
tensor, which makes w invisible to the underlying simplicial set.

Both are exact over finitely generated abelian groups and are used by
the test-suite and the bundled example data.
"""

from __future__ import annotations

from .cosmos import FGAb, FGAbMor
from .quiver import TensorQuiver, VQuiver, VQuiverMor, unit_quiver
from .sset import FinSimpSet
from .templicial import Templicial, free_templicial


def doubling_object(mu11: int = 2) -> Templicial:
    """One vertex, all levels Z, s_0 on X_0 doubling; truncated at D = 2.

    With ``mu11 = 2`` (the inner comultiplication coefficient matching
    the doubled degeneracy) the axioms hold; any other value breaks
    naturality of mu against s_0 and is useful as a mutation probe.
    """
    ab = FGAb()
    Z = ab.obj(1, [])
    star = "*"
    S = (star,)
    levels = [VQuiver(ab, S, {(star, star): Z}) for _ in range(3)]

    def scalar(n: int) -> FGAbMor:
        return ab.mor(Z, Z, [[n]])

    def mk_mu(k: int, l: int, coef: int) -> VQuiverMor:
        TQ = TensorQuiver([levels[k], levels[l]])
        comp = ab.mor(Z, TQ.quiver(star, star), [[coef]])
        return VQuiverMor(levels[k + l], TQ.quiver, {(star, star): comp})

    face = {(2, 1): VQuiverMor(levels[2], levels[1], {(star, star): scalar(1)})}
    degen = {
        (0, 0): VQuiverMor(levels[0], levels[1], {(star, star): scalar(2)}),
        (1, 0): VQuiverMor(levels[1], levels[2], {(star, star): scalar(1)}),
        (1, 1): VQuiverMor(levels[1], levels[2], {(star, star): scalar(1)}),
    }
    comult = {
        (k, l): mk_mu(k, l, mu11 if k > 0 and l > 0 else 1)
        for k in range(3)
        for l in range(3 - k)
    }
    counit = VQuiverMor(levels[0], unit_quiver(ab, S), {(star, star): scalar(1)})
    return Templicial(ab, S, levels, face, degen, comult, counit)


def twin_triangles() -> FinSimpSet:
    """Two hollow triangles a -> c_i -> b sharing the long edge h: a -> b."""
    vertices = ("a", "c1", "c2", "b")
    edge_ends = {
        "f1": ("a", "c1"),
        "g1": ("c1", "b"),
        "f2": ("a", "c2"),
        "g2": ("c2", "b"),
        "h": ("a", "b"),
    }
    sv = {v: f"s{v}" for v in vertices}
    edges = tuple(edge_ends) + tuple(sv[v] for v in vertices)
    ends = dict(edge_ends)
    for v in vertices:
        ends[sv[v]] = (v, v)

    two_cells = tuple(f"s0{e}" for e in edge_ends) + tuple(
        f"s1{e}" for e in edge_ends
    ) + tuple(f"ss{v}" for v in vertices)

    face = {
        (1, 0): {e: ends[e][1] for e in edges},
        (1, 1): {e: ends[e][0] for e in edges},
        (2, 0): {},
        (2, 1): {},
        (2, 2): {},
    }
    degen = {
        (0, 0): {v: sv[v] for v in vertices},
        (1, 0): {},
        (1, 1): {},
    }
    for e in edge_ends:
        src, dst = ends[e]
        face[(2, 0)][f"s0{e}"] = e
        face[(2, 1)][f"s0{e}"] = e
        face[(2, 2)][f"s0{e}"] = sv[src]
        face[(2, 0)][f"s1{e}"] = sv[dst]
        face[(2, 1)][f"s1{e}"] = e
        face[(2, 2)][f"s1{e}"] = e
        degen[(1, 0)][e] = f"s0{e}"
        degen[(1, 1)][e] = f"s1{e}"
    for v in vertices:
        face[(2, 0)][f"ss{v}"] = sv[v]
        face[(2, 1)][f"ss{v}"] = sv[v]
        face[(2, 2)][f"ss{v}"] = sv[v]
        degen[(1, 0)][sv[v]] = f"ss{v}"
        degen[(1, 1)][sv[v]] = f"ss{v}"

    cells = {0: vertices, 1: edges, 2: two_cells}
    return FinSimpSet(2, cells, face, degen)


def w_extension() -> tuple[Templicial, dict]:
    """The free object on the twin triangles with one extra 2-simplex w.

    X_2(a, b) grows from F{s0h, s1h} to Zw + F{s0h, s1h} (w listed
    first); the new structure is d_1(w) = h and
    mu_{1,1}(w) = f1 (x) g1 + f2 (x) g2, everything else is induced.
    Returns the object together with named points into its hom objects:
    "w", "s0h", "s1h" at level 2 and "h", "f1", "g1", "f2", "g2", "sa",
    "sb" at level 1.
    """
    ab = FGAb()
    base = free_templicial(twin_triangles(), ab)
    S = base.vertices
    spot = ("a", "b")

    # X_2(a, b) was free on (s0h, s1h); prepend a generator for w
    old2 = base.levels[2]
    new_hom = dict(old2.hom)
    new_hom[spot] = ab.obj(3, [])
    levels = [base.levels[0], base.levels[1], VQuiver(ab, S, new_hom)]

    def pad_column(m: FGAbMor, coeffs: list[int]) -> list[list[int]]:
        """Insert a leading source generator (w) hitting ``coeffs``."""
        return [[c] + list(row) for c, row in zip(coeffs, m.matrix)]

    def pad_row(m: FGAbMor) -> list[list[int]]:
        """Insert a leading target generator (w) that nothing hits."""
        return [[0] * m.src.ngen] + [list(row) for row in m.matrix]

    def rebuild(mor: VQuiverMor, src: VQuiver, dst: VQuiver, surgery: dict) -> VQuiverMor:
        comps = {}
        for pair, comp in mor.components.items():
            if pair in surgery:
                comps[pair] = ab.mor(src(pair[0], pair[1]), dst(pair[0], pair[1]), surgery[pair])
            elif not ab.is_initial(comp.src):
                comps[pair] = ab.mor(src(pair[0], pair[1]), dst(pair[0], pair[1]), comp.matrix)
        return VQuiverMor(src, dst, comps)

    face = {
        (2, 1): rebuild(
            base.face[(2, 1)],
            levels[2],
            levels[1],
            {spot: pad_column(base.face[(2, 1)](*spot), [1])},
        )
    }
    degen = {
        (0, 0): base.degen[(0, 0)],
        (1, 0): rebuild(
            base.degen[(1, 0)], levels[1], levels[2],
            {spot: pad_row(base.degen[(1, 0)](*spot))},
        ),
        (1, 1): rebuild(
            base.degen[(1, 1)], levels[1], levels[2],
            {spot: pad_row(base.degen[(1, 1)](*spot))},
        ),
    }

    comult = {}
    for (k, l), mor in base.comult.items():
        TQ = TensorQuiver([levels[k], levels[l]])
        if k + l < 2 and 2 not in (k, l):
            comult[(k, l)] = rebuild(mor, levels[k + l], TQ.quiver, {})
            continue
        surgery = {}
        if k + l == 2:
            old = mor(*spot)
            if (k, l) == (1, 1):
                # mu(w) = f1 (x) g1 + f2 (x) g2; middle-vertex blocks are
                # ordered a, c1, c2, b
                mid_order = [c for c in S if (c,) in TQ.paths(*spot)]
                coeffs = [int(c in ("c1", "c2")) for c in mid_order]
                surgery[spot] = pad_column(old, coeffs)
            else:
                # mu_{2,0} and mu_{0,2} are unit-padded identities; w maps
                # to w tensor (unit point), i.e. the new leading generator
                surgery[spot] = [[1] + [0] * old.src.ngen] + pad_column(old, [0, 0])
        comult[(k, l)] = rebuild(mor, levels[k + l], TQ.quiver, surgery)

    X = Templicial(ab, S, levels, face, degen, comult, base.counit)

    I = ab.unit()

    def point(level: int, a: str, b: str, coords: list[int]) -> FGAbMor:
        return ab.mor(I, X.level(level)(a, b), [[c] for c in coords])

    names = {
        "w": point(2, "a", "b", [1, 0, 0]),
        "s0h": point(2, "a", "b", [0, 1, 0]),
        "s1h": point(2, "a", "b", [0, 0, 1]),
        "h": point(1, "a", "b", [1]),
        "f1": point(1, "a", "c1", [1]),
        "g1": point(1, "c1", "b", [1]),
        "f2": point(1, "a", "c2", [1]),
        "g2": point(1, "c2", "b", [1]),
        "sa": point(1, "a", "a", [1]),
        "sb": point(1, "b", "b", [1]),
    }
    return X, names
