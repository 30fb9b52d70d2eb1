"""Monotone maps between finite ordinals [n] = {0 < 1 < ... < n}.

Three nested worlds live here:

* all weakly monotone maps (faces + degeneracies and their composites),
* the endpoint-preserving ("interval") maps, which carry a monoidal sum
  ``f + g`` given by gluing the last vertex of one interval to the first
  of the next, and
* the monotone surjections, which index degenerate simplices.

Maps are immutable value objects that remember their codomain explicitly:
``(0, 1)`` into [1] and ``(0, 1)`` into [2] are *different* morphisms.
Enumerations are lexicographic on image tables so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Literal


class SimplexError(ValueError):
    """Raised for ill-formed or non-composable ordinal maps."""


@dataclass(frozen=True)
class OrdMap:
    """A weakly monotone map [m] -> [n], stored as its full image table.

    ``targets`` lists f(0), ..., f(m); ``cod`` is n.  The domain size m is
    implicit in the table length.

    >>> OrdMap((0, 1, 1), 1).is_surjective()
    True
    >>> OrdMap((0, 2), 2)(1)
    2
    """

    targets: tuple[int, ...]
    cod: int

    def __post_init__(self) -> None:
        if not self.targets:
            raise SimplexError("an ordinal map needs at least the image of 0")
        if any(b < a for a, b in zip(self.targets, self.targets[1:])):
            raise SimplexError(f"image table {self.targets} is not weakly increasing")
        if self.targets[0] < 0 or self.targets[-1] > self.cod:
            raise SimplexError(
                f"image table {self.targets} does not land in [{self.cod}]"
            )

    @property
    def dom(self) -> int:
        return len(self.targets) - 1

    def __call__(self, i: int) -> int:
        return self.targets[i]

    def __repr__(self) -> str:
        table = ",".join(str(t) for t in self.targets)
        return f"OrdMap([{table}]:[{self.dom}]->[{self.cod}])"

    # -- basic predicates ------------------------------------------------

    def is_identity(self) -> bool:
        return self.cod == self.dom and self.targets == tuple(range(self.dom + 1))

    def is_surjective(self) -> bool:
        return set(self.targets) == set(range(self.cod + 1))

    def is_injective(self) -> bool:
        return len(set(self.targets)) == len(self.targets)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.targets)))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"dom": self.dom, "cod": self.cod, "map": list(self.targets)}

    @classmethod
    def from_json(cls, payload: dict) -> "OrdMap":
        f = cls(tuple(payload["map"]), payload["cod"])
        if f.dom != payload["dom"]:
            raise SimplexError(
                f"declared domain [{payload['dom']}] does not match "
                f"table of length {len(f.targets)}"
            )
        return f


def identity(n: int) -> OrdMap:
    """The identity of [n]."""
    return OrdMap(tuple(range(n + 1)), n)


def compose(f: OrdMap, g: OrdMap) -> OrdMap:
    """Diagrammatic composite: first ``f``, then ``g``.

    >>> compose(coface(1, 2), degeneracy(1, 1)) == identity(1)
    True
    """
    if f.cod != g.dom:
        raise SimplexError(
            f"cannot compose: codomain [{f.cod}] of {f} differs from "
            f"domain [{g.dom}] of {g}"
        )
    return OrdMap(tuple(g.targets[t] for t in f.targets), g.cod)


def coface(j: int, n: int) -> OrdMap:
    """The injection delta_j: [n-1] -> [n] skipping the value j.

    >>> coface(1, 2).targets
    (0, 2)
    """
    if not 0 <= j <= n or n < 1:
        raise SimplexError(f"coface index {j} out of range for [{n}]")
    return OrdMap(tuple(i if i < j else i + 1 for i in range(n)), n)


def degeneracy(i: int, n: int) -> OrdMap:
    """The surjection sigma_i: [n+1] -> [n] repeating the value i.

    >>> degeneracy(0, 1).targets
    (0, 0, 1)
    """
    if not 0 <= i <= n:
        raise SimplexError(f"degeneracy index {i} out of range for [{n}]")
    return OrdMap(tuple(min(k, i) if k <= i + 1 else k - 1 for k in range(n + 2)), n)


def is_interval(f: OrdMap, n: int | None = None) -> bool:
    """True iff f preserves both endpoints (and lands in [n] when given)."""
    if n is not None and f.cod != n:
        return False
    return f.targets[0] == 0 and f.targets[-1] == f.cod


def monoidal_sum(f: OrdMap, g: OrdMap) -> OrdMap:
    """Glue two interval maps end to start: (f + g)(i) = f(i) for i <= m,
    and m' + g(i - m) above, where m = dom f and m' = cod f.

    >>> monoidal_sum(identity(1), identity(2)).targets
    (0, 1, 2, 3)
    """
    if not is_interval(f) or not is_interval(g):
        raise SimplexError("monoidal sum is defined on endpoint-preserving maps only")
    glued = f.targets + tuple(f.cod + t for t in g.targets[1:])
    return OrdMap(glued, f.cod + g.cod)


def split_interval(f: OrdMap, k: int, l: int) -> tuple[OrdMap, OrdMap]:
    """Cut an interval map f: [k+l] -> [n] at position k.

    Returns the unique pair (f1: [k] -> [f(k)], f2: [l] -> [n - f(k)]) of
    interval maps with f1 + f2 = f.

    >>> f1, f2 = split_interval(OrdMap((0, 1, 1), 1), 1, 1)
    >>> (f1.targets, f1.cod, f2.targets, f2.cod)
    ((0, 1), 1, (0, 0), 0)
    """
    if k < 0 or l < 0 or k + l != f.dom:
        raise SimplexError(f"cannot split [{f.dom}] as [{k}] + [{l}]")
    if not is_interval(f):
        raise SimplexError(f"{f} does not preserve endpoints")
    p = f.targets[k]
    f1 = OrdMap(f.targets[: k + 1], p)
    f2 = OrdMap(tuple(t - p for t in f.targets[k:]), f.cod - p)
    return f1, f2


def epi_mono_factor(f: OrdMap) -> tuple[OrdMap, OrdMap]:
    """The unique factorization of f as a surjection followed by an injection."""
    image = f.image()
    k = len(image) - 1
    rank = {v: r for r, v in enumerate(image)}
    epi = OrdMap(tuple(rank[t] for t in f.targets), k)
    mono = OrdMap(image, f.cod)
    return epi, mono


GeneratorToken = tuple[Literal["d", "s"], int]


def generator_word(f: OrdMap) -> list[GeneratorToken]:
    """Express f as a diagrammatic word in cofaces and degeneracies.

    The word is a list of ("s", i) / ("d", j) tokens to be applied left to
    right; degeneracies come first (largest duplicated position first),
    cofaces afterwards (smallest missing value first).  Composing the word
    reproduces f exactly; on a contravariant functor the word is consumed
    right to left.

    >>> generator_word(OrdMap((0, 0, 2), 2))
    [('s', 0), ('d', 1)]
    """
    dups = [a for a in range(f.dom) if f.targets[a] == f.targets[a + 1]]
    missing = [j for j in range(f.cod + 1) if j not in set(f.targets)]
    word: list[GeneratorToken] = [("s", a) for a in reversed(dups)]
    word.extend(("d", j) for j in missing)
    return word


# -- enumeration -------------------------------------------------------------


def enumerate_maps(m: int, n: int) -> Iterator[OrdMap]:
    """All weakly monotone maps [m] -> [n], lexicographically by image table."""
    for table in combinations_with_replacement(range(n + 1), m + 1):
        yield OrdMap(table, n)


def enumerate_interval_maps(m: int, n: int) -> Iterator[OrdMap]:
    """All endpoint-preserving maps [m] -> [n], lexicographic order."""
    for f in enumerate_maps(m, n):
        if is_interval(f):
            yield f


def enumerate_surjections(n: int, k: int) -> list[OrdMap]:
    """All weakly monotone surjections [n] ->> [k], lexicographic order.

    >>> [f.targets for f in enumerate_surjections(2, 1)]
    [(0, 0, 1), (0, 1, 1)]
    """
    return [f for f in enumerate_maps(n, k) if f.is_surjective()]


def enumerate_injections(m: int, n: int) -> list[OrdMap]:
    """All strictly monotone maps [m] -> [n], lexicographic order."""
    return [f for f in enumerate_maps(m, n) if f.is_injective()]
