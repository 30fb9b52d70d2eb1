"""Necklaces: finite wedges of simplices glued at endpoints.

A necklace is a pair (T, p) with {0, p} <= T <= {0..p}; the elements of T
are the *joints* and the gaps between consecutive joints are the *beads*.
Morphisms (T, p) -> (U, q) are endpoint-preserving monotone maps
f: [p] -> [q] with U <= f(T).  Every morphism factors uniquely as an
*active* map (image of joints is exactly the target joints) followed by an
*inert* map (identity on vertices, joints thrown away).

The module also houses flags — chains of vertex subsets refining a
necklace, which index the simplicial direction of rigidification — and
flankification, the right adjoint that squeezes an arbitrary flag into a
flanked one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .simplexcat import (
    OrdMap,
    SimplexError,
    coface,
    compose,
    degeneracy,
    enumerate_interval_maps,
    identity,
    is_interval,
    monoidal_sum,
)


class NecklaceError(ValueError):
    """Raised for malformed necklaces, flags, or necklace maps."""


@dataclass(frozen=True)
class Necklace:
    """A necklace (T, p), stored as the sorted joint tuple and p.

    >>> Necklace((0, 1, 3), 3).beads()
    (1, 2)
    """

    joints: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        if self.joints != tuple(sorted(set(self.joints))):
            raise NecklaceError(f"joints {self.joints} must be strictly increasing")
        if not self.joints or self.joints[0] != 0 or self.joints[-1] != self.p:
            raise NecklaceError(
                f"joints {self.joints} must contain both endpoints 0 and {self.p}"
            )

    def __repr__(self) -> str:
        return f"Necklace({{{','.join(str(t) for t in self.joints)}}}, p={self.p})"

    @property
    def num_beads(self) -> int:
        return len(self.joints) - 1

    def beads(self) -> tuple[int, ...]:
        """Sizes of the beads, in order."""
        return tuple(b - a for a, b in zip(self.joints, self.joints[1:]))

    def bead_intervals(self) -> tuple[tuple[int, int], ...]:
        """The vertex intervals [t_{i-1}, t_i] spanned by each bead."""
        return tuple(zip(self.joints, self.joints[1:]))

    def is_simplex(self) -> bool:
        return self.num_beads <= 1

    def is_spine(self) -> bool:
        return len(self.joints) == self.p + 1

    def to_json(self) -> dict:
        return {"p": self.p, "joints": list(self.joints)}

    @classmethod
    def from_json(cls, payload: dict) -> "Necklace":
        return cls(tuple(payload["joints"]), payload["p"])


def simplex(n: int) -> Necklace:
    """The one-bead necklace ({0, n}, n); for n = 0 the point."""
    return Necklace((0, n) if n > 0 else (0,), n)


def spine(p: int) -> Necklace:
    """The necklace ([p], p) whose beads are all edges."""
    return Necklace(tuple(range(p + 1)), p)


@dataclass(frozen=True)
class NeckMap:
    """A necklace morphism: an interval map carrying joints onto joints."""

    src: Necklace
    dst: Necklace
    f: OrdMap

    def __post_init__(self) -> None:
        if self.f.dom != self.src.p or self.f.cod != self.dst.p:
            raise NecklaceError(
                f"underlying map {self.f} does not run [{self.src.p}] -> [{self.dst.p}]"
            )
        if not is_interval(self.f):
            raise NecklaceError(f"underlying map {self.f} must preserve endpoints")
        image = {self.f(t) for t in self.src.joints}
        if not set(self.dst.joints) <= image:
            raise NecklaceError(
                f"joints {self.dst.joints} not covered by image {sorted(image)}"
            )

    def __call__(self, i: int) -> int:
        return self.f(i)

    def joint_image(self) -> tuple[int, ...]:
        return tuple(sorted({self.f(t) for t in self.src.joints}))

    def is_active(self) -> bool:
        return self.joint_image() == self.dst.joints

    def is_inert(self) -> bool:
        return self.f.is_identity()

    def is_identity(self) -> bool:
        return self.is_inert() and self.src == self.dst

    def to_json(self) -> dict:
        return {
            "src": self.src.to_json(),
            "dst": self.dst.to_json(),
            "map": list(self.f.targets),
        }

    @classmethod
    def from_json(cls, payload: dict) -> "NeckMap":
        src = Necklace.from_json(payload["src"])
        dst = Necklace.from_json(payload["dst"])
        return cls(src, dst, OrdMap(tuple(payload["map"]), dst.p))


def identity_map(T: Necklace) -> NeckMap:
    return NeckMap(T, T, identity(T.p))


def compose_maps(f: NeckMap, g: NeckMap) -> NeckMap:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.dst != g.src:
        raise NecklaceError(f"cannot compose {f} with {g}")
    return NeckMap(f.src, g.dst, compose(f.f, g.f))


def wedge(A: Necklace, B: Necklace) -> Necklace:
    """Glue B onto the last vertex of A.

    >>> wedge(simplex(1), simplex(2))
    Necklace({0,1,3}, p=3)
    """
    joints = A.joints + tuple(A.p + u for u in B.joints[1:])
    return Necklace(joints, A.p + B.p)


def wedge_maps(f: NeckMap, g: NeckMap) -> NeckMap:
    """The wedge of two necklace maps, acting blockwise."""
    return NeckMap(
        wedge(f.src, g.src), wedge(f.dst, g.dst), monoidal_sum(f.f, g.f)
    )


def active_inert_factor(f: NeckMap) -> tuple[NeckMap, NeckMap]:
    """The unique factorization of f as active followed by inert."""
    middle = Necklace(f.joint_image(), f.dst.p)
    active = NeckMap(f.src, middle, f.f)
    inert = NeckMap(middle, f.dst, identity(f.dst.p))
    return active, inert


def generators(kind: str, params: dict) -> NeckMap:
    """The generating necklace maps, by name.

    ``kind`` is one of:

    * ``"delta"`` — the inner coface delta_j between one-bead necklaces,
      params {"j": j, "n": n} with 0 < j < n;
    * ``"sigma"`` — the codegeneracy sigma_i between one-bead necklaces,
      params {"i": i, "n": n};
    * ``"nu"`` — the inert map ({0,k,k+l}, k+l) -> ({0,k+l}, k+l) that
      forgets the middle joint, params {"k": k, "l": l} with k, l > 0.
    """
    if kind == "delta":
        j, n = params["j"], params["n"]
        if not 0 < j < n:
            raise NecklaceError(f"delta_{j} is not inner for [{n}]")
        return NeckMap(simplex(n - 1), simplex(n), coface(j, n))
    if kind == "sigma":
        i, n = params["i"], params["n"]
        return NeckMap(simplex(n + 1), simplex(n), degeneracy(i, n))
    if kind == "nu":
        k, l = params["k"], params["l"]
        if k <= 0 or l <= 0:
            raise NecklaceError(f"nu_{{{k},{l}}} needs positive parts")
        return NeckMap(
            Necklace((0, k, k + l), k + l), simplex(k + l), identity(k + l)
        )
    raise NecklaceError(f"unknown generator kind {kind!r}")


def spine_maps(T: Necklace) -> tuple[NeckMap, NeckMap]:
    """The two canonical maps onto T.

    Returns the unique active map ([k], k) -> T hitting the joints (k the
    bead count) and the unique inert map ([p], p) -> T.
    """
    active = NeckMap(spine(T.num_beads), T, OrdMap(T.joints, T.p))
    inert = NeckMap(spine(T.p), T, identity(T.p))
    return active, inert


# -- flags and flankification -------------------------------------------------


@dataclass(frozen=True)
class Flag:
    """A chain T_0 <= ... <= T_n of vertex subsets refining a necklace."""

    base: Necklace
    chain: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.chain:
            raise NecklaceError("a flag has length >= 0, so at least one term")
        prev = set(self.base.joints)
        for term in self.chain:
            if list(term) != sorted(set(term)):
                raise NecklaceError(f"flag term {term} must be strictly increasing")
            if not prev <= set(term):
                raise NecklaceError(f"flag terms must increase: {self.chain}")
            prev = set(term)
        if prev - set(range(self.base.p + 1)):
            raise NecklaceError(f"flag term {sorted(prev)} leaves {{0..{self.base.p}}}")

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def is_flanked(self) -> bool:
        return self.chain[0] == self.base.joints and self.chain[-1] == tuple(
            range(self.base.p + 1)
        )

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "chain": [list(t) for t in self.chain]}

    @classmethod
    def from_json(cls, payload: dict) -> "Flag":
        return cls(
            Necklace.from_json(payload["base"]),
            tuple(tuple(t) for t in payload["chain"]),
        )


def maps_flag(f: NeckMap, source: Flag, target: Flag) -> bool:
    """True iff f sends each flag term of the source onto the matching target term."""
    if source.base != f.src or target.base != f.dst or source.length != target.length:
        return False
    return all(
        tuple(sorted({f(t) for t in s})) == u
        for s, u in zip(source.chain, target.chain)
    )


def push_flag(f: NeckMap, source: Flag) -> Flag:
    """The image flag (f(T_0), ..., f(T_n)) on the target necklace."""
    return Flag(
        f.dst, tuple(tuple(sorted({f(t) for t in term})) for term in source.chain)
    )


def flankify(base: Necklace, flag: Flag) -> tuple[Necklace, Flag, NeckMap]:
    """Collapse a flag to a flanked one on a smaller necklace.

    The top term T_n, reindexed by its unique order isomorphism with
    [|T_n| - 1], becomes the full vertex set; all terms are transported
    along.  Returns the new necklace, the flanked flag, and the counit map
    back to ``base`` (underlying map: the inclusion of T_n).
    """
    if flag.base != base:
        raise NecklaceError("flag does not live on the given necklace")
    top = flag.chain[-1]
    k = len(top) - 1
    rank = {v: r for r, v in enumerate(top)}
    new_chain = tuple(tuple(rank[v] for v in term) for term in flag.chain)
    necklace = Necklace(new_chain[0], k)
    new_flag = Flag(necklace, new_chain)
    counit = NeckMap(necklace, base, OrdMap(top, base.p))
    return necklace, new_flag, counit


# -- the posets P_T of coarsenings --------------------------------------------


def poset_elements(T: Necklace) -> list[tuple[int, ...]]:
    """All S with T <= S <= {0..p}, ordered by size then lexicographically.

    These are the objects of the poset whose nerve carries the flags on T.
    """
    free = [v for v in range(T.p + 1) if v not in set(T.joints)]
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            out.append(tuple(sorted(set(T.joints) | set(extra))))
    return out


def poset_pair_split(
    A: Necklace, B: Necklace, S: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split an element of P_{A v B} into its P_A and P_B halves."""
    left = tuple(v for v in S if v <= A.p)
    right = tuple(v - A.p for v in S if v >= A.p)
    return left, right


def poset_pair_join(
    A: Necklace, B: Necklace, SA: tuple[int, ...], SB: tuple[int, ...]
) -> tuple[int, ...]:
    """Merge P_A and P_B elements into one of P_{A v B}."""
    return tuple(sorted(set(SA) | {A.p + v for v in SB}))


# -- enumeration ---------------------------------------------------------------


def enumerate_necklaces(p: int) -> list[Necklace]:
    """All necklaces on p + 1 vertices, in lexicographic joint order."""
    if p == 0:
        return [Necklace((0,), 0)]
    out = []
    for r in range(p):
        for mid in combinations(range(1, p), r):
            out.append(Necklace((0, *mid, p), p))
    return sorted(out, key=lambda T: T.joints)


def enumerate_flags(T: Necklace, n: int) -> list[Flag]:
    """All flags of length n on T, deterministic order."""
    terms = poset_elements(T)
    index = {S: i for i, S in enumerate(terms)}
    out = []
    for chain in product(terms, repeat=n + 1):
        if all(set(a) <= set(b) for a, b in zip(chain, chain[1:])):
            out.append(Flag(T, chain))
    out.sort(key=lambda fl: tuple(index[t] for t in fl.chain))
    return out


def enumerate_flanked_flags(T: Necklace, n: int) -> list[Flag]:
    """All flanked flags of length n on T, deterministic order."""
    full = tuple(range(T.p + 1))
    if n == 0:
        return [Flag(T, (T.joints,))] if T.joints == full else []
    out = []
    for flag in enumerate_flags(T, n):
        if flag.chain[0] == T.joints and flag.chain[-1] == full:
            out.append(flag)
    return out


def enumerate_neckmaps(T: Necklace, U: Necklace) -> list[NeckMap]:
    """All necklace maps T -> U, lexicographic on the underlying table."""
    out = []
    joints = set(U.joints)
    for f in enumerate_interval_maps(T.p, U.p):
        if joints <= {f(t) for t in T.joints}:
            out.append(NeckMap(T, U, f))
    return out


def enumerate_flagged_maps(
    src: Necklace, src_flag: Flag, dst: Necklace, dst_flag: Flag
) -> Iterator[NeckMap]:
    """All necklace maps carrying one flag termwise onto another."""
    for f in enumerate_neckmaps(src, dst):
        if maps_flag(f, src_flag, dst_flag):
            yield f
