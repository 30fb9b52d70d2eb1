"""Quivers enriched in a cosmos, over a fixed finite vertex set.

A quiver assigns an object of the base category to every ordered pair of
vertices.  The composite ``(Q (x)_S P)(a, b)`` is the coproduct over all
middle vertices c of Q(a, c) (x) P(c, b); this module keeps the coproduct
injections for every path of middle vertices, because downstream code
constantly needs to address single summands (reading off components of
comultiplications, assembling horn conditions) rather than the bare
object.

Base change along a map of vertex sets comes in the adjoint pair
pushforward / pullback, together with the colax structure maps of the
pushforward that templicial morphisms are checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .cosmos import Cosmos, VMor, VObj


class QuiverError(ValueError):
    """Raised for mismatched vertex sets or ill-typed quiver morphisms."""


class VQuiver:
    """A map S x S -> objects of the cosmos; missing pairs default to 0."""

    def __init__(self, cosmos: Cosmos, vertices: Sequence, hom: dict | None = None):
        self.cosmos = cosmos
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertices")
        hom = dict(hom or {})
        self.hom = {}
        for a in self.vertices:
            for b in self.vertices:
                self.hom[(a, b)] = hom.pop((a, b), cosmos.initial())
        if hom:
            raise QuiverError(f"hom entries outside S x S: {sorted(hom)!r}")

    def __call__(self, a, b) -> VObj:
        return self.hom[(a, b)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VQuiver)
            and self.cosmos is other.cosmos
            and self.vertices == other.vertices
            and self.hom == other.hom
        )

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{a}->{b}: {obj!r}" for (a, b), obj in self.hom.items()
            if not self.cosmos.is_initial(obj)
        )
        return f"VQuiver({list(self.vertices)}; {entries})"

    def to_json(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "hom": {
                f"{a}|{b}": self.cosmos.obj_to_json(obj)
                for (a, b), obj in self.hom.items()
                if not self.cosmos.is_initial(obj)
            },
        }

    @classmethod
    def from_json(cls, cosmos: Cosmos, payload: dict) -> "VQuiver":
        hom = {}
        for key, obj in payload["hom"].items():
            a, b = key.split("|")
            hom[(a, b)] = cosmos.obj_from_json(obj)
        return cls(cosmos, payload["vertices"], hom)


class VQuiverMor:
    """A componentwise morphism of quivers over the same vertex set."""

    def __init__(self, src: VQuiver, dst: VQuiver, components: dict):
        if src.vertices != dst.vertices:
            raise QuiverError("quiver morphism needs a common vertex set")
        self.src = src
        self.dst = dst
        self.components = {}
        components = dict(components)
        for pair in src.hom:
            f = components.pop(pair, None)
            if f is None:
                # only a morphism out of 0 can be left implicit
                if not src.cosmos.is_initial(src.hom[pair]):
                    raise QuiverError(f"missing component at {pair}")
                f = src.cosmos.from_initial(dst.hom[pair])
            if f.src != src.hom[pair] or f.dst != dst.hom[pair]:
                raise QuiverError(f"component at {pair} is ill-typed")
            self.components[pair] = f
        if components:
            raise QuiverError(f"components outside S x S: {sorted(components)!r}")

    def __call__(self, a, b) -> VMor:
        return self.components[(a, b)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VQuiverMor)
            and self.src == other.src
            and self.dst == other.dst
            and self.components == other.components
        )

    def __repr__(self) -> str:
        return f"VQuiverMor({self.src!r} => {self.dst!r})"


def identity_quiver_mor(Q: VQuiver) -> VQuiverMor:
    return VQuiverMor(Q, Q, {pair: Q.cosmos.identity(obj) for pair, obj in Q.hom.items()})


def compose_quiver_mors(f: VQuiverMor, g: VQuiverMor) -> VQuiverMor:
    if f.dst != g.src:
        raise QuiverError("non-composable quiver morphisms")
    cosmos = f.src.cosmos
    return VQuiverMor(
        f.src,
        g.dst,
        {pair: cosmos.compose(f(*pair), g(*pair)) for pair in f.components},
    )


def is_quiver_iso(f: VQuiverMor) -> bool:
    cosmos = f.src.cosmos
    return all(cosmos.is_iso(c) for c in f.components.values())


def invert_quiver_mor(f: VQuiverMor) -> VQuiverMor:
    cosmos = f.src.cosmos
    return VQuiverMor(
        f.dst, f.src, {pair: cosmos.invert(c) for pair, c in f.components.items()}
    )


def unit_quiver(cosmos: Cosmos, vertices: Sequence) -> VQuiver:
    """I_S: the unit on the diagonal, 0 elsewhere."""
    return VQuiver(
        cosmos, vertices, {(a, a): cosmos.unit() for a in vertices}
    )


@dataclass
class QuiverCoproduct:
    quiver: VQuiver
    injections: list[VQuiverMor]
    copair: Callable  # (legs, dst=None) -> VQuiverMor


def quiver_coproduct(
    cosmos: Cosmos, vertices: Sequence, summands: Sequence[VQuiver]
) -> QuiverCoproduct:
    """Componentwise coproduct of quivers over a shared vertex set."""
    vertices = tuple(vertices)
    summands = list(summands)
    for Q in summands:
        if Q.vertices != vertices:
            raise QuiverError("coproduct needs a common vertex set")
    cops = {
        (a, b): cosmos.coproduct([Q(a, b) for Q in summands])
        for a in vertices
        for b in vertices
    }
    total = VQuiver(cosmos, vertices, {pair: cop.obj for pair, cop in cops.items()})
    injections = [
        VQuiverMor(Q, total, {pair: cops[pair].injections[i] for pair in cops})
        for i, Q in enumerate(summands)
    ]

    def copair(legs: Sequence[VQuiverMor], dst: VQuiver | None = None) -> VQuiverMor:
        legs = list(legs)
        if len(legs) != len(summands):
            raise QuiverError("one cocone leg per summand, please")
        if dst is None:
            if not legs:
                raise QuiverError("copair of no legs needs a target")
            dst = legs[0].dst
        components = {
            pair: cops[pair].copair([leg(*pair) for leg in legs])
            if legs
            else cosmos.from_initial(dst.hom[pair])
            for pair in cops
        }
        return VQuiverMor(total, dst, components)

    return QuiverCoproduct(total, injections, copair)


class TensorQuiver:
    """The composite Q_1 (x)_S ... (x)_S Q_k with its summand bookkeeping.

    For k = 1 this is the quiver itself (one empty path per pair); for
    k = 0 it is the unit quiver, whose only summands sit on the diagonal.
    ``paths(a, b)`` lists tuples of middle vertices (c_1, ..., c_{k-1}).
    """

    def __init__(self, factors: Sequence[VQuiver]):
        if not factors:
            raise QuiverError("use unit_tensor_quiver for the empty composite")
        self.cosmos = factors[0].cosmos
        self.vertices = factors[0].vertices
        for Q in factors:
            if Q.vertices != self.vertices or Q.cosmos is not self.cosmos:
                raise QuiverError("factors live over different vertex sets")
        self.factors = list(factors)
        k = len(self.factors)
        self._paths: dict = {}
        self._coproducts: dict = {}
        hom = {}
        for a in self.vertices:
            for b in self.vertices:
                paths = [
                    mid
                    for mid in itertools.product(self.vertices, repeat=k - 1)
                    if not any(
                        self.cosmos.is_initial(obj)
                        for obj in self._objects_on(a, b, mid)
                    )
                ]
                cop = self.cosmos.coproduct(
                    [
                        self.cosmos.tensor_many(self._objects_on(a, b, mid))
                        for mid in paths
                    ]
                )
                self._paths[(a, b)] = paths
                self._coproducts[(a, b)] = cop
                hom[(a, b)] = cop.obj
        self.quiver = VQuiver(self.cosmos, self.vertices, hom)

    def _objects_on(self, a, b, mid: tuple) -> list[VObj]:
        stops = (a, *mid, b)
        return [Q(x, y) for Q, x, y in zip(self.factors, stops, stops[1:])]

    def paths(self, a, b) -> list[tuple]:
        return list(self._paths[(a, b)])

    def factor_objects(self, a, b, mid: tuple) -> list[VObj]:
        return self._objects_on(a, b, mid)

    def summand(self, a, b, mid: tuple) -> VObj:
        return self.cosmos.tensor_many(self._objects_on(a, b, mid))

    def injection(self, a, b, mid: tuple) -> VMor:
        return self._coproducts[(a, b)].injections[self._paths[(a, b)].index(mid)]

    def copair(self, a, b, legs: Callable[[tuple], VMor], dst: VObj | None = None) -> VMor:
        """Mediate out of the (a, b) component; ``legs`` maps a path to a leg.

        ``dst`` pins down the target when there are no summands at (a, b).
        """
        paths = self._paths[(a, b)]
        if not paths:
            if dst is None:
                raise QuiverError("copair out of an empty component needs a target")
            return self.cosmos.from_initial(dst)
        return self._coproducts[(a, b)].copair([legs(mid) for mid in paths])


def tensor_quivers(factors: Sequence[VQuiver]) -> TensorQuiver:
    return TensorQuiver(factors)


def tensor_quiver_mors(fs: Sequence[VQuiverMor]) -> VQuiverMor:
    """The componentwise tensor of quiver morphisms (all over the same S)."""
    if not fs:
        raise QuiverError("empty tensor of quiver morphisms is ambiguous")
    cosmos = fs[0].src.cosmos
    src = TensorQuiver([f.src for f in fs])
    dst = TensorQuiver([f.dst for f in fs])
    components = {}
    for a in src.vertices:
        for b in src.vertices:

            def leg(mid, a=a, b=b):
                stops = (a, *mid, b)
                parts = [
                    f(x, y) for f, x, y in zip(fs, stops, stops[1:])
                ]
                tensored = cosmos.tensor_mor_many(parts)
                if mid not in dst._paths[(a, b)]:
                    # the target path carries the zero object and was
                    # dropped from the coproduct
                    return cosmos.compose(
                        tensored, cosmos.from_initial(dst.quiver(a, b))
                    )
                return cosmos.compose(
                    tensored, dst.injection(a, b, mid)
                )

            components[(a, b)] = src.copair(a, b, leg, dst=dst.quiver(a, b))
    return VQuiverMor(src.quiver, dst.quiver, components)


def quiver_regroup(factors: Sequence[VQuiver], blocks: Sequence[Sequence[int]]) -> VQuiverMor:
    """The canonical iso regrouping a composite of quivers into blocks.

    Maps Q_1 (x)_S ... (x)_S Q_k to (x)-of-(x)s according to ``blocks``
    (a partition of 0..k-1 into consecutive runs).
    """
    flat = list(range(len(factors)))
    if [i for b in blocks for i in b] != flat:
        raise QuiverError("blocks must partition the factors in order")
    cosmos = factors[0].cosmos
    src = TensorQuiver(factors)
    grouped = [TensorQuiver([factors[i] for i in b]) for b in blocks]
    dst = TensorQuiver([g.quiver for g in grouped])
    # boundary positions of each block inside a full path of stops
    components = {}
    for a in src.vertices:
        for b in src.vertices:

            def leg(mid, a=a, b=b):
                stops = (a, *mid, b)
                cuts = [0]
                for blk in blocks:
                    cuts.append(cuts[-1] + len(blk))
                outer_mid = tuple(stops[c] for c in cuts[1:-1])
                inner_mids = [
                    tuple(stops[cuts[i] + 1: cuts[i + 1]]) for i in range(len(blocks))
                ]
                inner_endpoints = [
                    (stops[cuts[i]], stops[cuts[i + 1]]) for i in range(len(blocks))
                ]
                shuffle = cosmos.regroup(
                    src.factor_objects(a, b, mid), [list(blk) for blk in blocks]
                )
                pack = cosmos.tensor_mor_many(
                    [
                        g.injection(x, y, im)
                        for g, (x, y), im in zip(grouped, inner_endpoints, inner_mids)
                    ]
                )
                return cosmos.compose(
                    cosmos.compose(shuffle, pack), dst.injection(a, b, outer_mid)
                )

            components[(a, b)] = src.copair(a, b, leg, dst=dst.quiver(a, b))
    return VQuiverMor(src.quiver, dst.quiver, components)


def quiver_unit_insertion(
    factors: Sequence[VQuiver], positions: Sequence[int]
) -> VQuiverMor:
    """The canonical iso inserting unit quivers at the given result slots."""
    if not factors:
        raise QuiverError("inserting into the empty composite is not supported")
    cosmos = factors[0].cosmos
    vertices = factors[0].vertices
    src = TensorQuiver(factors)
    posset = set(positions)
    result: list[VQuiver] = []
    rest = iter(factors)
    for i in range(len(factors) + len(positions)):
        result.append(unit_quiver(cosmos, vertices) if i in posset else next(rest))
    dst = TensorQuiver(result)
    components = {}
    for a in vertices:
        for b in vertices:

            def leg(mid, a=a, b=b):
                # a unit factor spans (v, v), so its stop repeats the last one
                stops = [a]
                src_it = iter((*mid, b))
                for i in range(len(result)):
                    stops.append(stops[-1] if i in posset else next(src_it))
                out_mid = tuple(stops[1:-1])
                intro = cosmos.unit_insertion(
                    src.factor_objects(a, b, mid), list(positions)
                )
                return cosmos.compose(intro, dst.injection(a, b, out_mid))

            components[(a, b)] = src.copair(a, b, leg, dst=dst.quiver(a, b))
    return VQuiverMor(src.quiver, dst.quiver, components)


# -- base change ---------------------------------------------------------------


@dataclass
class Pushforward:
    """f_!(Q) with the injections indexed by source vertex pairs."""

    quiver: VQuiver
    injections: dict  # (a, b) -> VMor Q(a,b) -> f_!(Q)(f a, f b)
    copair: Callable  # (x, y, legs: dict[(a,b) -> VMor], dst=None) -> VMor


def pushforward(f: dict, Q: VQuiver, target_vertices: Sequence) -> Pushforward:
    """f_!(Q)(x, y) = coproduct of Q(a, b) over f(a) = x, f(b) = y."""
    cosmos = Q.cosmos
    T = tuple(target_vertices)
    for a in Q.vertices:
        if a not in f or f[a] not in T:
            raise QuiverError(f"vertex map undefined or out of range at {a!r}")
    fibers = {t: [a for a in Q.vertices if f[a] == t] for t in T}
    hom = {}
    cops = {}
    pairs_at = {}
    for x in T:
        for y in T:
            pairs = [(a, b) for a in fibers[x] for b in fibers[y]]
            cop = cosmos.coproduct([Q(a, b) for (a, b) in pairs])
            hom[(x, y)] = cop.obj
            cops[(x, y)] = cop
            pairs_at[(x, y)] = pairs
    out = VQuiver(cosmos, T, hom)
    injections = {}
    for (x, y), pairs in pairs_at.items():
        for idx, (a, b) in enumerate(pairs):
            injections[(a, b)] = cops[(x, y)].injections[idx]

    def copair(x, y, legs: dict, dst: VObj | None = None) -> VMor:
        pairs = pairs_at[(x, y)]
        if not pairs:
            if dst is None:
                raise QuiverError("copair out of an empty component needs a target")
            return cosmos.from_initial(dst)
        return cops[(x, y)].copair([legs[(a, b)] for (a, b) in pairs])

    return Pushforward(out, injections, copair)


def pushforward_mor(f: dict, phi: VQuiverMor, target_vertices: Sequence) -> VQuiverMor:
    """f_!(phi), the pushforward applied to a quiver morphism."""
    cosmos = phi.src.cosmos
    pS = pushforward(f, phi.src, target_vertices)
    pD = pushforward(f, phi.dst, target_vertices)
    components = {}
    for x in target_vertices:
        for y in target_vertices:
            legs = {
                (a, b): cosmos.compose(phi(a, b), pD.injections[(a, b)])
                for a in phi.src.vertices
                if f[a] == x
                for b in phi.src.vertices
                if f[b] == y
            }
            components[(x, y)] = pS.copair(x, y, legs, dst=pD.quiver(x, y))
    return VQuiverMor(pS.quiver, pD.quiver, components)


def pullback_mor(f: dict, phi: VQuiverMor, source_vertices: Sequence) -> VQuiverMor:
    """f^*(phi), the pullback applied to a quiver morphism."""
    return VQuiverMor(
        pullback_quiver(f, phi.src, source_vertices),
        pullback_quiver(f, phi.dst, source_vertices),
        {
            (a, b): phi(f[a], f[b])
            for a in source_vertices
            for b in source_vertices
        },
    )


def pushforward_compose_iso(
    f: dict, g: dict, Q: VQuiver, mid_vertices: Sequence, target_vertices: Sequence
) -> VQuiverMor:
    """The canonical iso (g o f)_!(Q) -> g_!(f_!(Q))."""
    gf = {a: g[f[a]] for a in Q.vertices}
    whole = pushforward(gf, Q, target_vertices)
    first = pushforward(f, Q, mid_vertices)
    second = pushforward(g, first.quiver, target_vertices)
    cosmos = Q.cosmos
    components = {}
    for x in target_vertices:
        for y in target_vertices:
            legs = {
                (a, b): cosmos.compose(
                    first.injections[(a, b)], second.injections[(f[a], f[b])]
                )
                for a in Q.vertices
                if gf[a] == x
                for b in Q.vertices
                if gf[b] == y
            }
            components[(x, y)] = whole.copair(x, y, legs, dst=second.quiver(x, y))
    return VQuiverMor(whole.quiver, second.quiver, components)


def pullback_quiver(f: dict, Q: VQuiver, source_vertices: Sequence) -> VQuiver:
    """f^*(Q)(a, b) = Q(f a, f b)."""
    return VQuiver(
        Q.cosmos,
        tuple(source_vertices),
        {(a, b): Q(f[a], f[b]) for a in source_vertices for b in source_vertices},
    )


def pushforward_unit(f: dict, Q: VQuiver, target_vertices: Sequence) -> VQuiverMor:
    """The adjunction unit Q -> f^*(f_!(Q))."""
    push = pushforward(f, Q, target_vertices)
    back = pullback_quiver(f, push.quiver, Q.vertices)
    return VQuiverMor(
        Q, back, {(a, b): push.injections[(a, b)] for a in Q.vertices for b in Q.vertices}
    )


def pushforward_counit(f: dict, Q: VQuiver, source_vertices: Sequence) -> VQuiverMor:
    """The adjunction counit f_!(f^*(Q)) -> Q."""
    cosmos = Q.cosmos
    pulled = pullback_quiver(f, Q, source_vertices)
    push = pushforward(f, pulled, Q.vertices)
    components = {}
    for x in Q.vertices:
        for y in Q.vertices:
            components[(x, y)] = push.copair(
                x,
                y,
                {
                    (a, b): cosmos.identity(Q(x, y))
                    for a in source_vertices
                    if f[a] == x
                    for b in source_vertices
                    if f[b] == y
                },
                dst=Q(x, y),
            )
    return VQuiverMor(push.quiver, Q, components)


def pushforward_colax(
    f: dict, Q: VQuiver, P: VQuiver, target_vertices: Sequence
) -> VQuiverMor:
    """The colax structure map f_!(Q (x)_S P) -> f_!(Q) (x)_T f_!(P)."""
    cosmos = Q.cosmos
    inner = TensorQuiver([Q, P])
    push_in = pushforward(f, inner.quiver, target_vertices)
    pushQ = pushforward(f, Q, target_vertices)
    pushP = pushforward(f, P, target_vertices)
    outer = TensorQuiver([pushQ.quiver, pushP.quiver])
    components = {}
    for x in target_vertices:
        for y in target_vertices:
            legs = {}
            for a in Q.vertices:
                if f[a] != x:
                    continue
                for b in Q.vertices:
                    if f[b] != y:
                        continue

                    def leg(mid, a=a, b=b):
                        (c,) = mid
                        part = cosmos.tensor_mor(
                            pushQ.injections[(a, c)], pushP.injections[(c, b)]
                        )
                        return cosmos.compose(
                            part, outer.injection(x, y, (f[c],))
                        )

                    legs[(a, b)] = inner.copair(a, b, leg, dst=outer.quiver(x, y))
            components[(x, y)] = push_in.copair(x, y, legs, dst=outer.quiver(x, y))
    return VQuiverMor(push_in.quiver, outer.quiver, components)


def pushforward_unit_colax(
    cosmos: Cosmos, f: dict, source_vertices: Sequence, target_vertices: Sequence
) -> VQuiverMor:
    """The unit part f_!(I_S) -> I_T of the pushforward's colax structure."""
    I_S = unit_quiver(cosmos, source_vertices)
    I_T = unit_quiver(cosmos, target_vertices)
    push = pushforward(f, I_S, target_vertices)
    components = {}
    for x in target_vertices:
        for y in target_vertices:
            legs = {}
            for a in source_vertices:
                if f[a] != x:
                    continue
                for b in source_vertices:
                    if f[b] != y:
                        continue
                    if a == b:
                        legs[(a, b)] = cosmos.identity(cosmos.unit())
                    else:
                        legs[(a, b)] = cosmos.from_initial(I_T(x, y))
            components[(x, y)] = push.copair(x, y, legs, dst=I_T(x, y))
    return VQuiverMor(push.quiver, I_T, components)
