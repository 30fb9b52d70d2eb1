"""Finite truncated simplicial sets and the classical set-level oracle.

Everything here lives in plain sets: standard simplices, horns and
boundaries, nerves of finite posets and categories, bipointed necklace
restrictions K_T(a, b), the classical rigidification c[K](a, b) computed
through canonical flanked totally-non-degenerate representatives, and the
classical homotopy coherent nerve of a simplicial category with finite
data.  The enriched machinery elsewhere in the package is tested against
these constructions.

Simplicial sets are stored fully -- every cell up to the truncation, not
just the non-degenerate generators -- so that gluing and functor
enumeration stay simple table lookups.
"""

from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass

from .necklace import Flag, Necklace, NeckMap, flankify, push_flag
from .necklace import enumerate_flanked_flags
from .simplexcat import (
    OrdMap,
    coface,
    compose as ord_compose,
    degeneracy,
    generator_word,
    identity as ord_identity,
)


class SimpSetError(ValueError):
    """Raised for ill-formed simplicial data or out-of-range queries."""


def _decode_label(text: str):
    """Undo the ``repr`` encoding used for JSON cell labels.

    Labels built by this package are literals (ints, strings, nested
    tuples); anything else survives as the raw string.
    """
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


class FinSimpSet:
    """A truncated simplicial set given by explicit cell tables.

    ``cells[n]`` is a tuple of labels, ``face[(n, i)]`` and
    ``degen[(n, i)]`` are label-level dictionaries for d_i and s_i.
    """

    def __init__(self, D: int, cells: dict, face: dict, degen: dict, check: bool = True):
        self.D = D
        self.cells = {n: tuple(cells.get(n, ())) for n in range(D + 1)}
        self.face = face
        self.degen = degen
        self._nondeg: dict[int, tuple] = {}
        if check:
            self.validate()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSimpSet):
            return NotImplemented
        return (
            self.D == other.D
            and self.cells == other.cells
            and self.face == other.face
            and self.degen == other.degen
        )

    def __hash__(self):
        return hash((self.D, tuple(sorted((n, v) for n, v in self.cells.items()))))

    # -- structure maps ---------------------------------------------------

    def d(self, i: int, n: int, x):
        return self.face[(n, i)][x]

    def s(self, i: int, n: int, x):
        return self.degen[(n, i)][x]

    def vertex(self, n: int, x, k: int):
        """The k-th vertex of an n-cell."""
        cur, dim = x, n
        for j in range(n, k, -1):
            cur, dim = self.face[(dim, j)][cur], dim - 1
        for _ in range(k):
            cur, dim = self.face[(dim, 0)][cur], dim - 1
        return cur

    def act(self, g: OrdMap, x):
        """The contravariant action: an m-cell from an n-cell, g: [m] -> [n]."""
        if g.cod > self.D or g.dom > self.D:
            raise SimpSetError("action exceeds the truncation")
        cur, dim = x, g.cod
        for kind, idx in reversed(generator_word(g)):
            if kind == "d":
                cur, dim = self.face[(dim, idx)][cur], dim - 1
            else:
                cur, dim = self.degen[(dim, idx)][cur], dim + 1
        return cur

    # -- degeneracy bookkeeping -------------------------------------------

    def is_degenerate(self, n: int, x) -> bool:
        return n > 0 and any(
            self.degen[(n - 1, i)][self.face[(n, i)][x]] == x for i in range(n)
        )

    def nondegenerate(self, n: int) -> tuple:
        if n not in self._nondeg:
            self._nondeg[n] = tuple(
                x for x in self.cells[n] if not self.is_degenerate(n, x)
            )
        return self._nondeg[n]

    def ez_decompose(self, n: int, x) -> tuple[OrdMap, object]:
        """The unique surjection and non-degenerate cell beneath x."""
        dim, cur = n, x
        strips: list[int] = []
        while dim > 0:
            for i in range(dim):
                y = self.face[(dim, i)][cur]
                if self.degen[(dim - 1, i)][y] == cur:
                    strips.append(i)
                    cur, dim = y, dim - 1
                    break
            else:
                break
        surj = ord_identity(dim)
        for i in reversed(strips):
            surj = ord_compose(degeneracy(i, surj.dom), surj)
        return surj, cur

    # -- validation --------------------------------------------------------

    def validate(self) -> None:
        for n in range(self.D + 1):
            if len(set(self.cells[n])) != len(self.cells[n]):
                raise SimpSetError(f"duplicate labels in dimension {n}")
        for n in range(1, self.D + 1):
            for i in range(n + 1):
                table = self.face.get((n, i))
                if table is None or set(table) != set(self.cells[n]):
                    raise SimpSetError(f"face ({n},{i}) is not total")
                if any(y not in set(self.cells[n - 1]) for y in table.values()):
                    raise SimpSetError(f"face ({n},{i}) leaves the cell set")
        for n in range(self.D):
            for i in range(n + 1):
                table = self.degen.get((n, i))
                if table is None or set(table) != set(self.cells[n]):
                    raise SimpSetError(f"degeneracy ({n},{i}) is not total")
                if any(y not in set(self.cells[n + 1]) for y in table.values()):
                    raise SimpSetError(f"degeneracy ({n},{i}) leaves the cell set")
        # simplicial identities, restricted to the truncation
        for n in range(2, self.D + 1):
            for j in range(n + 1):
                for i in range(j):
                    for x in self.cells[n]:
                        if self.d(i, n - 1, self.d(j, n, x)) != self.d(
                            j - 1, n - 1, self.d(i, n, x)
                        ):
                            raise SimpSetError(f"d{i} d{j} fails at dim {n}")
        for n in range(self.D - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    for x in self.cells[n]:
                        if self.s(i, n + 1, self.s(j, n, x)) != self.s(
                            j + 1, n + 1, self.s(i, n, x)
                        ):
                            raise SimpSetError(f"s{i} s{j} fails at dim {n}")
        for n in range(self.D):
            for j in range(n + 1):
                for i in range(n + 2):
                    for x in self.cells[n]:
                        lhs = self.d(i, n + 1, self.s(j, n, x))
                        if i == j or i == j + 1:
                            rhs = x
                        elif i < j:
                            if n == 0:
                                continue
                            rhs = self.s(j - 1, n - 1, self.d(i, n, x))
                        else:
                            if n == 0:
                                continue
                            rhs = self.s(j, n - 1, self.d(i - 1, n, x))
                        if lhs != rhs:
                            raise SimpSetError(f"d{i} s{j} fails at dim {n}")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "cells": {str(n): [repr(x) for x in self.cells[n]] for n in self.cells},
            "d": {
                f"{n},{i}": {repr(x): repr(y) for x, y in table.items()}
                for (n, i), table in self.face.items()
            },
            "s": {
                f"{n},{i}": {repr(x): repr(y) for x, y in table.items()}
                for (n, i), table in self.degen.items()
            },
        }

    @classmethod
    def from_json(cls, payload: dict) -> "FinSimpSet":
        cells = {
            int(n): tuple(_decode_label(x) for x in v)
            for n, v in payload["cells"].items()
        }
        face = {}
        for key, table in payload["d"].items():
            n, i = map(int, key.split(","))
            face[(n, i)] = {
                _decode_label(x): _decode_label(y) for x, y in table.items()
            }
        degen = {}
        for key, table in payload["s"].items():
            n, i = map(int, key.split(","))
            degen[(n, i)] = {
                _decode_label(x): _decode_label(y) for x, y in table.items()
            }
        return cls(payload["D"], cells, face, degen)


@dataclass(frozen=True)
class Bipointed:
    """A simplicial set with chosen start and end vertices."""

    base: FinSimpSet
    start: object
    end: object

    def __post_init__(self) -> None:
        for v in (self.start, self.end):
            if v not in self.base.cells[0]:
                raise SimpSetError(f"{v!r} is not a vertex")


# -- standard families -----------------------------------------------------


def _monotone_tuples(m: int, n: int):
    for xs in itertools.combinations_with_replacement(range(n + 1), m + 1):
        yield xs


def _from_monotone_family(n: int, D: int, keep) -> FinSimpSet:
    cells = {
        m: tuple(xs for xs in _monotone_tuples(m, n) if keep(xs))
        for m in range(D + 1)
    }
    face = {
        (m, i): {
            xs: xs[:i] + xs[i + 1:] for xs in cells[m]
        }
        for m in range(1, D + 1)
        for i in range(m + 1)
    }
    degen = {
        (m, i): {
            xs: xs[: i + 1] + xs[i:] for xs in cells[m]
        }
        for m in range(D)
        for i in range(m + 1)
    }
    return FinSimpSet(D, cells, face, degen)


def standard_simplex(n: int, D: int | None = None) -> FinSimpSet:
    """Delta^n, with cells the monotone tuples in [n]."""
    return _from_monotone_family(n, n if D is None else D, lambda xs: True)


def boundary(n: int, D: int | None = None) -> FinSimpSet:
    """The boundary of Delta^n: cells that miss some vertex."""
    return _from_monotone_family(
        n, n if D is None else D, lambda xs: set(xs) != set(range(n + 1))
    )


def horn(n: int, j: int, D: int | None = None) -> FinSimpSet:
    """The horn missing the j-th face of Delta^n."""
    if not 0 <= j <= n:
        raise SimpSetError(f"horn index {j} out of range for n={n}")
    full = set(range(n + 1))
    return _from_monotone_family(
        n, n if D is None else D, lambda xs: set(xs) | {j} != full
    )


def nerve_of_poset(elements, leq, D: int) -> FinSimpSet:
    """The nerve of a finite poset: n-cells are weak chains x_0 <= ... <= x_n.

    ``leq`` may be a callable or a collection of ordered pairs.
    """
    elems = tuple(elements)
    rel = leq if callable(leq) else (lambda x, y: (x, y) in set(leq))
    for x in elems:
        if not rel(x, x):
            raise SimpSetError("relation is not reflexive")
    for x in elems:
        for y in elems:
            if x != y and rel(x, y) and rel(y, x):
                raise SimpSetError("relation is not antisymmetric")
            for z in elems:
                if rel(x, y) and rel(y, z) and not rel(x, z):
                    raise SimpSetError("relation is not transitive")

    def chains(m):
        out = []

        def grow(prefix):
            if len(prefix) == m + 1:
                out.append(tuple(prefix))
                return
            for y in elems:
                if not prefix or rel(prefix[-1], y):
                    grow(prefix + [y])

        grow([])
        return tuple(out)

    cells = {m: chains(m) for m in range(D + 1)}
    face = {
        (m, i): {c: c[:i] + c[i + 1:] for c in cells[m]}
        for m in range(1, D + 1)
        for i in range(m + 1)
    }
    degen = {
        (m, i): {c: c[: i + 1] + c[i:] for c in cells[m]}
        for m in range(D)
        for i in range(m + 1)
    }
    return FinSimpSet(D, cells, face, degen)


def simp_product(K: FinSimpSet, L: FinSimpSet) -> FinSimpSet:
    """The levelwise product, truncated at the smaller truncation."""
    D = min(K.D, L.D)
    cells = {
        n: tuple(itertools.product(K.cells[n], L.cells[n])) for n in range(D + 1)
    }
    face = {
        (n, i): {
            (x, y): (K.face[(n, i)][x], L.face[(n, i)][y]) for (x, y) in cells[n]
        }
        for n in range(1, D + 1)
        for i in range(n + 1)
    }
    degen = {
        (n, i): {
            (x, y): (K.degen[(n, i)][x], L.degen[(n, i)][y]) for (x, y) in cells[n]
        }
        for n in range(D)
        for i in range(n + 1)
    }
    return FinSimpSet(D, cells, face, degen)


def is_discrete(K: FinSimpSet) -> bool:
    """True when every cell above dimension 0 is degenerate.

    Discrete simplicial sets are Kan complexes, so this doubles as the
    package's only (deliberately trivial) fibrancy certificate.
    """
    return all(not K.nondegenerate(n) for n in range(1, K.D + 1))


# -- simplicial maps -------------------------------------------------------


def _extend_to_degenerates(A: FinSimpSet, B: FinSimpSet, phi: dict, n: int) -> None:
    # recompute every degenerate entry: stale values may linger after backtracking
    for x in A.cells[n]:
        if not A.is_degenerate(n, x):
            continue
        surj, z = A.ez_decompose(n, x)
        phi[(n, x)] = B.act(surj, phi[(surj.cod, z)])


def enumerate_simplicial_maps(A: FinSimpSet, B: FinSimpSet, max_dim: int | None = None):
    """All simplicial maps A -> B as dicts (n, cell) -> cell, up to max_dim."""
    top = min(A.D, B.D) if max_dim is None else max_dim
    if top > min(A.D, B.D):
        raise SimpSetError("truncation insufficient for requested dimension")

    results: list[dict] = []

    def assign(n: int, todo: list, phi: dict):
        if n > top:
            results.append(dict(phi))
            return
        if not todo:
            _extend_to_degenerates(A, B, phi, n)
            nxt = list(A.nondegenerate(n + 1)) if n < top else []
            assign(n + 1, nxt, phi)
            return
        x = todo[0]
        for y in B.cells[n]:
            if n > 0 and any(
                B.face[(n, i)][y] != phi[(n - 1, A.face[(n, i)][x])]
                for i in range(n + 1)
            ):
                continue
            phi[(n, x)] = y
            assign(n, todo[1:], phi)
            del phi[(n, x)]

    assign(0, list(A.nondegenerate(0)), {})
    return results


def simp_iso(K: FinSimpSet, L: FinSimpSet) -> bool:
    """Decide whether two (small) simplicial sets are isomorphic."""
    if K.D != L.D:
        return False
    if any(len(K.cells[n]) != len(L.cells[n]) for n in range(K.D + 1)):
        return False
    top = K.D

    def assign(n: int, todo: list, phi: dict, used: set) -> bool:
        if n > top:
            return True
        if not todo:
            _extend_to_degenerates(K, L, phi, n)
            if len({phi[(n, x)] for x in K.cells[n]}) != len(K.cells[n]):
                return False
            nxt = list(K.nondegenerate(n + 1)) if n < top else []
            return assign(n + 1, nxt, phi, set())
        x = todo[0]
        for y in L.nondegenerate(n):
            if (n, y) in used:
                continue
            if n > 0 and any(
                L.face[(n, i)][y] != phi[(n - 1, K.face[(n, i)][x])]
                for i in range(n + 1)
            ):
                continue
            phi[(n, x)] = y
            used.add((n, y))
            if assign(n, todo[1:], phi, used):
                return True
            used.discard((n, y))
            del phi[(n, x)]
        return False

    if any(
        len(K.nondegenerate(n)) != len(L.nondegenerate(n)) for n in range(top + 1)
    ):
        return False
    return assign(0, list(K.nondegenerate(0)), {}, set())


def inner_horn_report(K: FinSimpSet, n_max: int):
    """Count fillers for every inner horn of K up to dimension n_max.

    Yields tuples (n, j, horn_data, filler_count) where horn_data is the
    tuple of (n-1)-cells (y_i) for i != j.
    """
    if n_max > K.D:
        raise SimpSetError("truncation insufficient")
    for n in range(2, n_max + 1):
        for j in range(1, n):
            idxs = [i for i in range(n + 1) if i != j]
            for ys in itertools.product(K.cells[n - 1], repeat=len(idxs)):
                data = dict(zip(idxs, ys))
                if not _horn_compatible(K, n, j, data):
                    continue
                fillers = [
                    x
                    for x in K.cells[n]
                    if all(K.face[(n, i)][x] == data[i] for i in idxs)
                ]
                yield n, j, tuple(ys), len(fillers)


def _horn_compatible(K: FinSimpSet, n: int, j: int, data: dict) -> bool:
    for i in data:
        for k in data:
            if i < k and (n - 1) >= 1:
                if K.face[(n - 1, i)][data[k]] != K.face[(n - 1, k - 1)][data[i]]:
                    return False
    return True


def sset_is_quasicategory(K: FinSimpSet, n_max: int):
    """Check unique-ish inner horn filling by brute force.

    Returns (fills, fills_uniquely, first_counterexample).
    """
    fills, unique = True, True
    witness = None
    for n, j, ys, count in inner_horn_report(K, n_max):
        if count == 0:
            fills = unique = False
            witness = witness or (n, j, ys, count)
        elif count > 1 and unique:
            unique = False
            witness = witness or (n, j, ys, count)
    return fills, unique, witness


# -- necklace restrictions K_T(a, b) ----------------------------------------


class NecRestriction:
    """The functor T -> K_T(a, b) of joint-glued bead tuples."""

    def __init__(self, bip: Bipointed):
        self.K = bip.base
        self.a = bip.start
        self.b = bip.end

    def at(self, T: Necklace) -> list[tuple]:
        K, a, b = self.K, self.a, self.b
        if T.p == 0:
            return [()] if a == b else []
        sizes = T.beads()
        if max(sizes) > K.D:
            raise SimpSetError("bead dimension exceeds the truncation")
        out: list[tuple] = []

        def grow(i: int, v, picked: tuple):
            if i == len(sizes):
                if v == b:
                    out.append(picked)
                return
            m = sizes[i]
            for sigma in K.cells[m]:
                if K.vertex(m, sigma, 0) == v:
                    grow(i + 1, K.vertex(m, sigma, m), picked + (sigma,))

        grow(0, a, ())
        return out

    def vertex_at(self, T: Necklace, point: tuple, q: int):
        """The vertex of a glued point sitting at position q of [p]."""
        if T.p == 0:
            return self.a
        for idx, (t0, t1) in enumerate(T.bead_intervals()):
            if t0 <= q <= t1:
                return self.K.vertex(t1 - t0, point[idx], q - t0)
        raise SimpSetError(f"position {q} outside [{T.p}]")

    def act(self, f: NeckMap, point: tuple) -> tuple:
        """Contravariant action: a point over f.dst becomes one over f.src."""
        T, U = f.src, f.dst
        out = []
        for (t0, t1) in T.bead_intervals():
            q0, q1 = f.f(t0), f.f(t1)
            m = t1 - t0
            if q0 == q1:
                w = self.vertex_at(U, point, q0)
                out.append(self.K.act(OrdMap((0,) * (m + 1), 0), w))
                continue
            for idx, (u0, u1) in enumerate(U.bead_intervals()):
                if u0 <= q0 and q1 <= u1:
                    local = OrdMap(
                        tuple(f.f(t0 + x) - u0 for x in range(m + 1)), u1 - u0
                    )
                    out.append(self.K.act(local, point[idx]))
                    break
            else:
                raise SimpSetError("bead image straddles a joint")
        return tuple(out)


def restrict_to_nec(bip: Bipointed) -> NecRestriction:
    return NecRestriction(bip)


# -- classical rigidification ------------------------------------------------


def path_length_bound(bip: Bipointed) -> int:
    """The longest total necklace length of a non-degenerate gluing.

    Requires the non-degenerate cells to move strictly forward: if any
    non-degenerate positive-dimensional cell starts and ends at the same
    vertex, no finite bound exists and an explicit budget must be given.
    """
    K = bip.base
    arcs: dict = {}
    for m in range(1, K.D + 1):
        for x in K.nondegenerate(m):
            v, w = K.vertex(m, x, 0), K.vertex(m, x, m)
            if v == w:
                raise SimpSetError(
                    "cells loop back to their start; pass an explicit bead budget"
                )
            arcs.setdefault(v, []).append((w, m))

    best: dict = {}

    def longest(v) -> int:
        if v in best:
            if best[v] is None:
                raise SimpSetError("cycle detected; pass an explicit bead budget")
            return best[v]
        best[v] = None
        score = 0
        for w, m in arcs.get(v, ()):  # weight = bead dimension
            score = max(score, m + longest(w))
        best[v] = score
        return score

    return longest(bip.start)


def classical_rigidify(
    bip: Bipointed, n_max: int, bead_budget: int | None = None
) -> FinSimpSet:
    """The hom simplicial set c[K](a, b) up to degree n_max.

    Cells are canonical triples (necklace, totally-non-degenerate glued
    point, flanked flag), encoded as (joints, point, chain) labels.
    """
    R = NecRestriction(bip)
    K, a, b = bip.base, bip.start, bip.end
    budget = path_length_bound(bip) if bead_budget is None else bead_budget

    gluings: list[tuple[Necklace, tuple]] = []
    if a == b:
        gluings.append((Necklace((0,), 0), ()))

    def grow(v, sizes: tuple, picked: tuple):
        total = sum(sizes)
        if v == b and sizes:
            joints = tuple(itertools.accumulate((0,) + sizes))
            gluings.append((Necklace(joints, total), picked))
        for m in range(1, K.D + 1):
            if total + m > budget:
                break
            for sigma in K.nondegenerate(m):
                if K.vertex(m, sigma, 0) == v:
                    grow(K.vertex(m, sigma, m), sizes + (m,), picked + (sigma,))

    grow(a, (), ())

    def encode(T: Necklace, z: tuple, chain) -> tuple:
        return (T.joints, z, tuple(tuple(S) for S in chain))

    def canonicalize(T: Necklace, z: tuple, chain) -> tuple:
        chain = [tuple(sorted(S)) for S in chain]
        # rebase at the bottom of the flag (splits beads)
        if chain[0] != T.joints:
            finer = Necklace(chain[0], T.p)
            refine = NeckMap(finer, T, ord_identity(T.p))
            z, T = R.act(refine, z), finer
        # trim to the top of the flag
        if chain[-1] != tuple(range(T.p + 1)):
            newT, newflag, eps = flankify(T, Flag(T, tuple(chain)))
            z, T, chain = R.act(eps, z), newT, list(newflag.chain)
        # strip degenerate beads
        decomps = [
            K.ez_decompose(t1 - t0, sigma)
            for (t0, t1), sigma in zip(T.bead_intervals(), z)
        ]
        if any(not surj.is_identity for surj, _ in decomps):
            offsets = [0]
            targets: list[int] = []
            for (t0, t1), (surj, _) in zip(T.bead_intervals(), decomps):
                base = offsets[-1]
                targets.extend(base + surj(x) for x in range(t1 - t0))
                offsets.append(base + surj.cod)
            targets.append(offsets[-1])
            under = OrdMap(tuple(targets), offsets[-1])
            newT = Necklace(tuple(sorted({under(t) for t in T.joints})), under.cod)
            g = NeckMap(T, newT, under)
            chain = list(push_flag(g, Flag(T, tuple(chain))).chain)
            z = tuple(zz for surj, zz in decomps if surj.cod > 0)
            T = newT
        return encode(T, z, chain)

    cells: dict[int, tuple] = {}
    for n in range(n_max + 1):
        labels = []
        for T, z in gluings:
            for flag in enumerate_flanked_flags(T, n):
                labels.append(encode(T, z, flag.chain))
        cells[n] = tuple(labels)

    def decode(label):
        joints, z, chain = label
        return Necklace(joints, joints[-1]), z, list(chain)

    face, degen = {}, {}
    for n in range(1, n_max + 1):
        for i in range(n + 1):
            table = {}
            for label in cells[n]:
                T, z, chain = decode(label)
                table[label] = canonicalize(T, z, chain[:i] + chain[i + 1:])
            face[(n, i)] = table
    for n in range(n_max):
        for i in range(n + 1):
            table = {}
            for label in cells[n]:
                T, z, chain = decode(label)
                table[label] = encode(T, z, chain[: i + 1] + chain[i:])
            degen[(n, i)] = table
    return FinSimpSet(n_max, cells, face, degen)


# -- simplicial categories and the classical coherent nerve -------------------


class SimpCat:
    """A simplicial category with finitely many objects and finite homs.

    ``comp(A, B, C, n, x, y)`` is the levelwise composite of x in
    hom(A, B)_n with y in hom(B, C)_n; ``ids[A]`` is the identity vertex.
    """

    def __init__(self, objects, hom: dict, comp, ids: dict, check: bool = True):
        self.objects = tuple(objects)
        self.hom = hom
        self.comp = comp
        self.ids = ids
        if check:
            self.validate()

    def hom_truncation(self) -> int:
        return min(H.D for H in self.hom.values())

    def identity_cell(self, A, n: int):
        x = self.ids[A]
        H = self.hom[(A, A)]
        for m in range(n):
            x = H.degen[(m, 0)][x]
        return x

    def validate(self) -> None:
        D = self.hom_truncation()
        for A in self.objects:
            if self.ids[A] not in self.hom[(A, A)].cells[0]:
                raise SimpSetError(f"identity of {A!r} is not a vertex")
        for A in self.objects:
            for B in self.objects:
                H = self.hom[(A, B)]
                for n in range(D + 1):
                    for x in H.cells[n]:
                        if self.comp(A, A, B, n, self.identity_cell(A, n), x) != x:
                            raise SimpSetError("left unit law fails")
                        if self.comp(A, B, B, n, x, self.identity_cell(B, n)) != x:
                            raise SimpSetError("right unit law fails")
        # composition is simplicial and associative
        for A in self.objects:
            for B in self.objects:
                for C in self.objects:
                    HAB, HBC = self.hom[(A, B)], self.hom[(B, C)]
                    for n in range(D + 1):
                        for x in HAB.cells[n]:
                            for y in HBC.cells[n]:
                                xy = self.comp(A, B, C, n, x, y)
                                if xy not in self.hom[(A, C)].cells[n]:
                                    raise SimpSetError("composite leaves the hom")
                                for i in range(n + 1):
                                    if n >= 1:
                                        lhs = self.hom[(A, C)].face[(n, i)][xy]
                                        rhs = self.comp(
                                            A, B, C, n - 1,
                                            HAB.face[(n, i)][x], HBC.face[(n, i)][y],
                                        )
                                        if lhs != rhs:
                                            raise SimpSetError("composition not simplicial")
                    for n in range(D + 1):
                        for Dd in self.objects:
                            HCD = self.hom[(C, Dd)]
                            for x in HAB.cells[n]:
                                for y in HBC.cells[n]:
                                    for zz in HCD.cells[n]:
                                        one = self.comp(
                                            A, C, Dd, n, self.comp(A, B, C, n, x, y), zz
                                        )
                                        two = self.comp(
                                            A, B, Dd, n, x, self.comp(B, C, Dd, n, y, zz)
                                        )
                                        if one != two:
                                            raise SimpSetError("composition not associative")


def discrete_simp_cat(objects, homsets: dict, comp, ids: dict, D: int) -> SimpCat:
    """A simplicial category with discrete homs, from ordinary category data.

    ``homsets[(A, B)]`` is a tuple of arrows, ``comp(A, B, C, f, g)`` the
    ordinary composite, ``ids[A]`` the identity arrow.
    """
    hom = {}
    for pair, arrows in homsets.items():
        cells = {n: tuple(arrows) for n in range(D + 1)}
        face = {
            (n, i): {x: x for x in arrows} for n in range(1, D + 1) for i in range(n + 1)
        }
        degen = {
            (n, i): {x: x for x in arrows} for n in range(D) for i in range(n + 1)
        }
        hom[pair] = FinSimpSet(D, cells, face, degen)

    def level_comp(A, B, C, n, x, y):
        return comp(A, B, C, x, y)

    return SimpCat(objects, hom, level_comp, ids)


def nerve_of_finite_category(objects, homsets: dict, comp, ids: dict, D: int) -> FinSimpSet:
    """The ordinary nerve: n-cells are strings of n composable arrows.

    A cell is stored as (objects tuple, arrows tuple).
    """
    strings: dict[int, tuple] = {0: tuple(((A,), ()) for A in objects)}
    for n in range(1, D + 1):
        out = []
        for objs, arrows in strings[n - 1]:
            for B in objects:
                for f in homsets.get((objs[-1], B), ()):
                    out.append((objs + (B,), arrows + (f,)))
        strings[n] = tuple(out)
    cells = strings

    def face_map(n, i, cell):
        objs, arrows = cell
        if i == 0:
            return objs[1:], arrows[1:]
        if i == n:
            return objs[:-1], arrows[:-1]
        glued = comp(objs[i - 1], objs[i], objs[i + 1], arrows[i - 1], arrows[i])
        return objs[:i] + objs[i + 1:], arrows[: i - 1] + (glued,) + arrows[i + 1:]

    def degen_map(n, i, cell):
        objs, arrows = cell
        return (
            objs[: i + 1] + objs[i:],
            arrows[:i] + (ids[objs[i]],) + arrows[i:],
        )

    face = {
        (n, i): {c: face_map(n, i, c) for c in cells[n]}
        for n in range(1, D + 1)
        for i in range(n + 1)
    }
    degen = {
        (n, i): {c: degen_map(n, i, c) for c in cells[n]}
        for n in range(D)
        for i in range(n + 1)
    }
    return FinSimpSet(D, cells, face, degen)


def _interval_poset_nerve(i: int, j: int, D: int) -> FinSimpSet:
    """The nerve of subsets of {i..j} that contain both endpoints."""
    mids = list(range(i + 1, j))
    elems = [
        tuple(sorted({i, j} | set(extra)))
        for r in range(len(mids) + 1)
        for extra in itertools.combinations(mids, r)
    ]
    return nerve_of_poset(elems, lambda S, T: set(S) <= set(T), D)


def classical_hc_nerve(C: SimpCat, D: int) -> FinSimpSet:
    """The homotopy coherent nerve, by exhaustive simplicial-functor search.

    An n-cell assigns objects to 0..n and, for each i < j, a simplicial
    map from the nerve of the interval poset P_{i,j} into hom(A_i, A_j),
    compatible with unions/composition.  Functor data is stored on all
    poset-nerve cells up to dimension max(D - 1, 0).
    """
    store = max(D - 1, 0)
    if C.hom_truncation() < store:
        raise SimpSetError("hom truncation insufficient for this nerve degree")
    nerves: dict[tuple[int, int], FinSimpSet] = {}

    def nerve_at(i, j):
        if (i, j) not in nerves:
            nerves[(i, j)] = _interval_poset_nerve(i, j, store)
        return nerves[(i, j)]

    def functor_cells(n: int) -> list:
        out = []
        for objs in itertools.product(C.objects, repeat=n + 1):
            for fam in _enumerate_functors(C, objs, nerve_at, store):
                out.append(_encode_functor(objs, fam, nerve_at, store))
        return out

    cells = {n: tuple(functor_cells(n)) for n in range(D + 1)}

    def reindex(n: int, g: OrdMap, label):
        objs, fam = _decode_functor(n, label, nerve_at, store)
        m = g.dom
        new_objs = tuple(objs[g(k)] for k in range(m + 1))
        new_fam = {}
        for k in range(m + 1):
            for l in range(k + 1, m + 1):
                gk, gl = g(k), g(l)
                N = nerve_at(k, l)
                table = {}
                for dim in range(store + 1):
                    for chain in N.cells[dim]:
                        if gk == gl:
                            table[(dim, chain)] = C.identity_cell(objs[gk], dim)
                        else:
                            moved = tuple(
                                tuple(sorted({g(v) for v in S})) for S in chain
                            )
                            table[(dim, chain)] = fam[(gk, gl)][(dim, moved)]
                new_fam[(k, l)] = table
        return _encode_functor(new_objs, new_fam, nerve_at, store)

    face = {}
    for n in range(1, D + 1):
        for i in range(n + 1):
            g = coface(i, n)
            face[(n, i)] = {lab: reindex(n, g, lab) for lab in cells[n]}
    degen = {}
    for n in range(D):
        for i in range(n + 1):
            g = degeneracy(i, n)
            degen[(n, i)] = {lab: reindex(n, g, lab) for lab in cells[n]}
    return FinSimpSet(D, cells, face, degen)


def _encode_functor(objs, fam, nerve_at, store) -> tuple:
    n = len(objs) - 1
    blocks = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            N = nerve_at(i, j)
            blocks.append(
                tuple(
                    tuple(fam[(i, j)][(dim, c)] for c in N.cells[dim])
                    for dim in range(store + 1)
                )
            )
    return (tuple(objs), tuple(blocks))


def _decode_functor(n, label, nerve_at, store):
    objs, blocks = label
    fam = {}
    idx = 0
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            N = nerve_at(i, j)
            table = {}
            for dim in range(store + 1):
                for pos, c in enumerate(N.cells[dim]):
                    table[(dim, c)] = blocks[idx][dim][pos]
            fam[(i, j)] = table
            idx += 1
    return objs, fam


def _enumerate_functors(C: SimpCat, objs, nerve_at, store):
    """All composition-compatible families of simplicial maps."""
    n = len(objs) - 1
    pairs = [(i, j) for span in range(1, n + 1) for i in range(n + 1 - span) for j in (i + span,)]
    results = []

    def decompose_at(i, j, chain):
        """Split a chain at a common middle vertex, if one exists."""
        for m in range(i + 1, j):
            if all(m in S for S in chain):
                left = tuple(tuple(v for v in S if v <= m) for S in chain)
                right = tuple(tuple(v for v in S if v >= m) for S in chain)
                return m, left, right
        return None

    def extend(pi: int, fam: dict):
        if pi == len(pairs):
            results.append({k: dict(v) for k, v in fam.items()})
            return
        i, j = pairs[pi]
        N = nerve_at(i, j)
        H = C.hom[(objs[i], objs[j])]
        table: dict = {}

        def fill(dim: int, todo: list):
            if dim > store:
                fam[(i, j)] = table
                extend(pi + 1, fam)
                del fam[(i, j)]
                return
            if not todo:
                added = []
                for c in N.cells[dim]:
                    if (dim, c) in table:
                        continue
                    surj, z = N.ez_decompose(dim, c)
                    table[(dim, c)] = H.act(surj, table[(surj.cod, z)])
                    added.append((dim, c))
                fill(dim + 1, list(N.nondegenerate(dim + 1)) if dim < store else [])
                for key in added:
                    del table[key]
                return
            c = todo[0]
            split = decompose_at(i, j, c)
            if split is not None:
                m, left, right = split
                forced = C.comp(
                    objs[i], objs[m], objs[j], dim,
                    fam[(i, m)][(dim, left)], fam[(m, j)][(dim, right)],
                )
                candidates = [forced]
            else:
                candidates = list(H.cells[dim])
            for y in candidates:
                if dim > 0 and any(
                    H.face[(dim, t)][y] != table[(dim - 1, N.face[(dim, t)][c])]
                    for t in range(dim + 1)
                ):
                    continue
                table[(dim, c)] = y
                fill(dim, todo[1:])
                del table[(dim, c)]

        fill(0, list(N.nondegenerate(0)))

    extend(0, {})
    return [
        fam for fam in results if _functor_is_compatible(C, objs, fam, nerve_at, store)
    ]


def _functor_is_compatible(C: SimpCat, objs, fam, nerve_at, store) -> bool:
    n = len(objs) - 1
    for i in range(n + 1):
        for m in range(i + 1, n):
            for j in range(m + 1, n + 1):
                Nim, Nmj = nerve_at(i, m), nerve_at(m, j)
                for dim in range(store + 1):
                    for c1 in Nim.cells[dim]:
                        for c2 in Nmj.cells[dim]:
                            union = tuple(
                                tuple(sorted(set(S) | set(T)))
                                for S, T in zip(c1, c2)
                            )
                            got = fam[(i, j)][(dim, union)]
                            want = C.comp(
                                objs[i], objs[m], objs[j], dim,
                                fam[(i, m)][(dim, c1)], fam[(m, j)][(dim, c2)],
                            )
                            if got != want:
                                return False
    return True
