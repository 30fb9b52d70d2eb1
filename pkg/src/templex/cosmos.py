"""Pluggable exact base categories: finite sets, F_p-vector spaces, and
finitely generated abelian groups.

Every construction the rest of the package needs — tensor products,
finite coproducts and limits, reflexive coequalizers, the free/forgetful
pair, splitting of monos — is provided here behind one interface, with
exact answers and explicit mediating morphisms.  No floats, no
approximation: set tables, matrices over F_p, and integer matrices
handled through Smith/Hermite normal forms.

Conventions shared by all instances:

* ``compose(f, g)`` is diagrammatic (first f, then g).
* ``tensor_many`` is n-ary and flat: ``tensor_many([A])`` is ``A`` itself
  and ``tensor_many([])`` is the unit.  Reassociation is an explicit iso
  built by ``regroup``; for matrices over a field it is literally the
  identity, for sets a relabeling, for abelian groups a change of
  presentation.
* Abelian groups are kept in normal form Z^r + Z/d_1 + ... + Z/d_k with
  d_1 | d_2 | ...; generators are listed free-first.  Morphisms are
  integer matrices on these generators, reduced mod the target orders at
  construction time, where well-definedness is also checked.
"""

from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Callable, Iterator, Sequence

from sympy import Matrix

from ._linalg import (
    int_kernel,
    int_solve,
    int_solve_mod,
    lattice_basis,
    p_inv,
    p_kernel,
    p_rank,
    p_rref,
    p_solve_many,
    snf,
)


class CosmosError(ValueError):
    """Raised for ill-typed diagrams or malformed objects/morphisms."""


class CapabilityError(CosmosError):
    """An operation the instance cannot perform exactly (e.g. enumerating
    the points of a group with free rank > 0)."""


def _decode_label(text: str):
    """Undo the ``repr`` encoding of set-element labels in JSON payloads.

    Labels used by this package are literals; a string that fails to parse
    is returned unchanged.
    """
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


# -- objects -------------------------------------------------------------------


@dataclass(frozen=True)
class FinSetObj:
    """A finite set with a remembered element order."""

    elements: tuple

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise CosmosError(f"duplicate labels in {self.elements!r}")

    def index(self, x) -> int:
        # lazily cached reverse lookup; the linear scan dominated profiles
        try:
            lookup = object.__getattribute__(self, "_lookup")
        except AttributeError:
            lookup = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_lookup", lookup)
        try:
            return lookup[x]
        except KeyError:
            raise CosmosError(f"{x!r} is not an element of this set") from None

    def __repr__(self) -> str:
        return f"FinSetObj({list(self.elements)!r})"


@dataclass(frozen=True)
class FinVectObj:
    """A vector space F_p^dim."""

    dim: int
    p: int

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise CosmosError("dimension must be >= 0")


@dataclass(frozen=True)
class FGAbObj:
    """A finitely generated abelian group Z^free + Z/d_1 + ... (d_1 | d_2 | ...)."""

    free: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free < 0 or any(d < 2 for d in self.torsion):
            raise CosmosError(f"not a normal form: free={self.free}, {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise CosmosError(f"invariant factors {self.torsion} not a chain")

    @property
    def ngen(self) -> int:
        return self.free + len(self.torsion)

    def orders(self) -> tuple[int, ...]:
        return (0,) * self.free + self.torsion


# -- morphisms -----------------------------------------------------------------


@dataclass(frozen=True)
class FinSetMor:
    """A function, stored as the tuple of target indices."""

    src: FinSetObj
    dst: FinSetObj
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != len(self.src.elements):
            raise CosmosError("table length does not match source size")
        if any(not 0 <= t < len(self.dst.elements) for t in self.table):
            raise CosmosError("table entry out of range")

    def __call__(self, x):
        return self.dst.elements[self.table[self.src.index(x)]]


@dataclass(frozen=True)
class FinVectMor:
    """A dst.dim x src.dim matrix over F_p, applied to column vectors."""

    src: FinVectObj
    dst: FinVectObj
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.src.p != self.dst.p:
            raise CosmosError("field mismatch")
        p = self.src.p
        if len(self.matrix) != self.dst.dim or any(
            len(row) != self.src.dim for row in self.matrix
        ):
            raise CosmosError("matrix shape mismatch")
        object.__setattr__(
            self, "matrix", tuple(tuple(x % p for x in row) for row in self.matrix)
        )


@dataclass(frozen=True)
class FGAbMor:
    """An integer matrix on chosen generators, reduced mod target orders.

    Well-definedness (torsion generators map to elements killed by their
    order) is verified at construction.
    """

    src: FGAbObj
    dst: FGAbObj
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.matrix) != self.dst.ngen or any(
            len(row) != self.src.ngen for row in self.matrix
        ):
            raise CosmosError("matrix shape mismatch")
        dst_orders = self.dst.orders()
        reduced = tuple(
            tuple(x % o if o else x for x in row)
            for row, o in zip(self.matrix, dst_orders)
        )
        object.__setattr__(self, "matrix", reduced)
        for j, m in enumerate(self.src.orders()):
            if m == 0:
                continue
            for i, o in enumerate(dst_orders):
                v = m * reduced[i][j]
                if (v % o if o else v) != 0:
                    raise CosmosError(
                        f"column {j} of order {m} does not map to an "
                        f"element killed by {m}"
                    )


VObj = FinSetObj | FinVectObj | FGAbObj
VMor = FinSetMor | FinVectMor | FGAbMor


# -- universal-construction containers ----------------------------------------


@dataclass
class Coproduct:
    obj: VObj
    injections: list[VMor]
    copair: Callable[[Sequence[VMor]], VMor]


def _identity_coproduct(cosmos: "Cosmos", A: VObj) -> Coproduct:
    """A one-summand coproduct, kept equal to the summand itself."""

    def copair(fs: Sequence[VMor]) -> VMor:
        if len(fs) != 1 or fs[0].src != A:
            raise CosmosError("cocone legs do not match the coproduct")
        return fs[0]

    return Coproduct(A, [cosmos.identity(A)], copair)


@dataclass
class Limit:
    obj: VObj
    projections: list[VMor]
    mediate: Callable[[Sequence[VMor]], VMor]


@dataclass
class Coequalizer:
    obj: VObj
    quotient: VMor
    mediate: Callable[[VMor], VMor]


@dataclass
class Complement:
    obj: VObj
    coproduct: Coproduct
    iso: VMor  # coproduct.obj -> dst of the mono, restricting to the mono


def _kron_int(mats: list[tuple[tuple[tuple[int, ...], ...], tuple[int, int]]]):
    """Kronecker product of integer matrices given as (rows, (m, n))."""
    shape_m = prod(m for _, (m, _) in mats)
    shape_n = prod(n for _, (_, n) in mats)
    row_dims = [m for _, (m, _) in mats]
    col_dims = [n for _, (_, n) in mats]
    out = [[0] * shape_n for _ in range(shape_m)]
    for I in itertools.product(*[range(m) for m in row_dims]):
        for J in itertools.product(*[range(n) for n in col_dims]):
            v = 1
            for (rows, _), i, j in zip(mats, I, J):
                v *= rows[i][j]
                if v == 0:
                    break
            if v:
                ri = 0
                for m, i in zip(row_dims, I):
                    ri = ri * m + i
                ci = 0
                for n, j in zip(col_dims, J):
                    ci = ci * n + j
                out[ri][ci] = v
    return tuple(tuple(r) for r in out)


class Cosmos:
    """Common scaffolding; concrete instances fill in the primitives."""

    name: str = "?"
    # hypotheses used by the quotient-lifting arguments in homotopy-category
    # constructions; true for all three shipped instances
    u_faithful = True
    u_preserves_reflexive_coequalizers = True
    u_reflects_reflexive_coequalizers = True
    certified_cosmos = True

    # concrete instances implement: unit, free, free_mor, basis_element,
    # copair_free, identity, compose, tensor_many, tensor_mor_many, regroup,
    # unit_insertion, coproduct, _product, _equalizer, reflexive_coequalizer,
    # u_elements, u_size, u_surjective, u_injective, complement, is_iso,
    # invert, is_initial, zero_mor, obj_to_json, obj_from_json, mor_to_json,
    # mor_from_json

    def tensor(self, A: VObj, B: VObj) -> VObj:
        return self.tensor_many([A, B])

    def tensor_mor(self, f: VMor, g: VMor) -> VMor:
        return self.tensor_mor_many([f, g])

    def initial(self) -> VObj:
        return self.coproduct([]).obj

    def from_initial(self, dst: VObj) -> VMor:
        """The unique morphism out of the initial object."""
        return self.zero_mor(self.initial(), dst)

    def finite_limit(
        self, nodes: Sequence[VObj], edges: Sequence[tuple[int, int, VMor]]
    ) -> Limit:
        """The limit of a finite diagram, as an equalizer of products.

        ``edges`` holds triples (i, j, f) with f: nodes[i] -> nodes[j].
        """
        for i, j, f in edges:
            if f.src != nodes[i] or f.dst != nodes[j]:
                raise CosmosError(f"edge ({i},{j}) is ill-typed")
        P, projs, pair = self._product(list(nodes))
        if not edges:
            return Limit(P, projs, pair)
        E, _, epair = self._product([nodes[j] for _, j, _ in edges])
        alpha = epair([self.compose(projs[i], f) for i, _, f in edges])
        beta = epair([projs[j] for _, j, _ in edges])
        L, include, factor = self._equalizer(alpha, beta)
        projections = [self.compose(include, pr) for pr in projs]

        def mediate(legs: Sequence[VMor]) -> VMor:
            return factor(pair(list(legs)))

        return Limit(L, projections, mediate)

    def equalizer(self, f: VMor, g: VMor) -> Limit:
        """The equalizer of a parallel pair, with its mediator."""
        if f.src != g.src or f.dst != g.dst:
            raise CosmosError("equalizer needs a parallel pair")
        L, include, factor = self._equalizer(f, g)
        return Limit(L, [include], lambda legs: factor(legs[0]))

    def pullback(self, f: VMor, g: VMor) -> Limit:
        """The pullback of f: A -> C and g: B -> C.

        Projections are ordered [to A, to B]; the mediator takes cone legs
        in the same order.
        """
        if f.dst != g.dst:
            raise CosmosError("pullback needs a common target")
        lim = self.finite_limit([f.src, g.src, f.dst], [(0, 2, f), (1, 2, g)])
        mediate = lim.mediate

        def mediate2(legs: Sequence[VMor]) -> VMor:
            la, lb = legs
            return mediate([la, lb, self.compose(la, f)])

        return Limit(lim.obj, lim.projections[:2], mediate2)

    def pair_elements(self, xs: Sequence[VMor]) -> VMor:
        """Combine points I -> A_i into a single point I -> A_1 x ... x A_k."""
        intro = self.unit_insertion([], list(range(len(xs))))
        return self.compose(intro, self.tensor_mor_many(list(xs)))

    def global_element(self, x: VMor) -> VMor:
        if x.src != self.unit():
            raise CosmosError("not a point: source is not the unit")
        return x


# -- finite sets ---------------------------------------------------------------


class FinSet(Cosmos):
    """Sets-with-order; the cartesian instance."""

    name = "finset"

    def _check(self, A, cls=FinSetObj):
        if not isinstance(A, cls):
            raise CosmosError(f"expected {cls.__name__}, got {type(A).__name__}")
        return A

    def unit(self) -> FinSetObj:
        return FinSetObj(("*",))

    def free(self, labels: Sequence) -> FinSetObj:
        return FinSetObj(tuple(labels))

    def free_mor(self, src: Sequence, dst: Sequence, fn: dict) -> FinSetMor:
        S, T = self.free(src), self.free(dst)
        return FinSetMor(S, T, tuple(T.index(fn[x]) for x in S.elements))

    def basis_element(self, labels: Sequence, x) -> FinSetMor:
        """The point I -> F(labels) picking out the generator x."""
        A = self.free(labels)
        return FinSetMor(self.unit(), A, (A.index(x),))

    def copair_free(self, labels: Sequence, legs: dict, dst: FinSetObj) -> FinSetMor:
        """The map F(labels) -> dst sending each generator x to the point legs[x]."""
        A = self.free(labels)
        table = []
        for x in A.elements:
            leg = legs[x]
            if leg.src != self.unit() or leg.dst != dst:
                raise CosmosError(f"leg at {x!r} is not a point of the target")
            table.append(leg.table[0])
        return FinSetMor(A, dst, tuple(table))

    def identity(self, A: FinSetObj) -> FinSetMor:
        return FinSetMor(A, A, tuple(range(len(A.elements))))

    def compose(self, f: FinSetMor, g: FinSetMor) -> FinSetMor:
        if f.dst != g.src:
            raise CosmosError("non-composable functions")
        return FinSetMor(f.src, g.dst, tuple(g.table[t] for t in f.table))

    # tuples are flat across the call's factors; a single factor stays bare
    @staticmethod
    def _coords(k: int, x) -> tuple:
        if k == 0:
            return ()
        return (x,) if k == 1 else x

    @staticmethod
    def _uncoords(k: int, coords: tuple):
        if k == 0:
            return "*"
        return coords[0] if k == 1 else coords

    def tensor_many(self, objs: Sequence[FinSetObj]) -> FinSetObj:
        if not objs:
            return self.unit()
        if len(objs) == 1:
            return objs[0]
        return FinSetObj(
            tuple(itertools.product(*[A.elements for A in objs]))
        )

    def tensor_mor_many(self, fs: Sequence[FinSetMor]) -> FinSetMor:
        src = self.tensor_many([f.src for f in fs])
        dst = self.tensor_many([f.dst for f in fs])
        k = len(fs)
        table = []
        for x in src.elements:
            coords = self._coords(k, x)
            image = tuple(f(c) for f, c in zip(fs, coords))
            table.append(dst.index(self._uncoords(k, image)))
        return FinSetMor(src, dst, tuple(table))

    def regroup(self, objs: Sequence[FinSetObj], blocks: Sequence[Sequence[int]]) -> FinSetMor:
        src = self.tensor_many(list(objs))
        grouped = [self.tensor_many([objs[i] for i in b]) for b in blocks]
        dst = self.tensor_many(grouped)
        table = []
        for x in src.elements:
            coords = self._coords(len(objs), x)
            outer = tuple(
                self._uncoords(len(b), tuple(coords[i] for i in b)) for b in blocks
            )
            table.append(dst.index(self._uncoords(len(blocks), outer)))
        return FinSetMor(src, dst, tuple(table))

    def unit_insertion(self, objs: Sequence[FinSetObj], positions: Sequence[int]) -> FinSetMor:
        src = self.tensor_many(list(objs))
        result: list[FinSetObj | None] = [None] * (len(objs) + len(positions))
        for pos in positions:
            result[pos] = self.unit()
        rest = iter(objs)
        result = [next(rest) if A is None else A for A in result]
        dst = self.tensor_many(result)
        posset = set(positions)
        table = []
        for x in src.elements:
            coords = iter(self._coords(len(objs), x))
            out = tuple(
                "*" if i in posset else next(coords) for i in range(len(result))
            )
            table.append(dst.index(self._uncoords(len(result), out)))
        return FinSetMor(src, dst, tuple(table))

    def coproduct(self, objs: Sequence[FinSetObj]) -> Coproduct:
        objs = list(objs)
        if len(objs) == 1:
            return _identity_coproduct(self, objs[0])
        elements = tuple((i, x) for i, A in enumerate(objs) for x in A.elements)
        C = FinSetObj(elements)
        injections = [
            FinSetMor(A, C, tuple(C.index((i, x)) for x in A.elements))
            for i, A in enumerate(objs)
        ]

        def copair(fs: Sequence[VMor]) -> FinSetMor:
            if len(fs) != len(objs) or any(f.src != A for f, A in zip(fs, objs)):
                raise CosmosError("cocone legs do not match the coproduct")
            dst = fs[0].dst if fs else self.initial()
            if any(f.dst != dst for f in fs):
                raise CosmosError("cocone legs must share a target")
            return FinSetMor(
                C, dst, tuple(fs[i].table[objs[i].index(x)] for (i, x) in elements)
            )

        return Coproduct(C, injections, copair)

    def _product(self, objs: list[FinSetObj]):
        P = self.tensor_many(objs)
        k = len(objs)
        projections = [
            FinSetMor(P, A, tuple(A.index(self._coords(k, x)[i]) for x in P.elements))
            for i, A in enumerate(objs)
        ]

        def pair(legs: Sequence[FinSetMor]) -> FinSetMor:
            if len(legs) != k:
                raise CosmosError("wrong number of cone legs")
            W = legs[0].src if legs else None
            if W is None:
                # empty product: unique map to the terminal object
                raise CosmosError("empty pairing needs an explicit source")
            table = tuple(
                P.index(self._uncoords(k, tuple(leg(x) for leg in legs)))
                for x in W.elements
            )
            return FinSetMor(W, P, table)

        return P, projections, pair

    def _equalizer(self, f: FinSetMor, g: FinSetMor):
        kept = [x for x in f.src.elements if f(x) == g(x)]
        E = FinSetObj(tuple(kept))
        include = FinSetMor(E, f.src, tuple(f.src.index(x) for x in kept))

        def factor(h: FinSetMor) -> FinSetMor:
            table = []
            for x in h.src.elements:
                y = h(x)
                if y not in E.elements:
                    raise CosmosError("morphism does not equalize the pair")
                table.append(E.index(y))
            return FinSetMor(h.src, E, tuple(table))

        return E, include, factor

    def reflexive_coequalizer(
        self, d0: FinSetMor, d1: FinSetMor, s0: FinSetMor
    ) -> Coequalizer:
        _validate_reflexive(self, d0, d1, s0)
        n = len(d0.dst.elements)
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in zip(d0.table, d1.table):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        roots = sorted({find(i) for i in range(n)})
        class_of = {i: roots.index(find(i)) for i in range(n)}
        Q = FinSetObj(tuple(d0.dst.elements[r] for r in roots))
        quotient = FinSetMor(d0.dst, Q, tuple(class_of[i] for i in range(n)))

        def mediate(h: FinSetMor) -> FinSetMor:
            table = [None] * len(roots)
            for i in range(n):
                c = class_of[i]
                if table[c] is None:
                    table[c] = h.table[i]
                elif table[c] != h.table[i]:
                    raise CosmosError("morphism does not coequalize the pair")
            return FinSetMor(Q, h.dst, tuple(table))

        return Coequalizer(Q, quotient, mediate)

    def u_elements(self, A: FinSetObj) -> Iterator[FinSetMor]:
        I = self.unit()
        for i in range(len(A.elements)):
            yield FinSetMor(I, A, (i,))

    def u_size(self, A: FinSetObj) -> int:
        return len(A.elements)

    def u_surjective(self, f: FinSetMor) -> bool:
        return set(f.table) == set(range(len(f.dst.elements)))

    def u_injective(self, f: FinSetMor) -> bool:
        return len(set(f.table)) == len(f.table)

    def complement(self, m: FinSetMor) -> Complement | None:
        if not self.u_injective(m):
            raise CosmosError("complement asked of a non-mono")
        image = set(m.table)
        N = FinSetObj(
            tuple(x for i, x in enumerate(m.dst.elements) if i not in image)
        )
        cop = self.coproduct([m.src, N])
        table = []
        for (i, x) in cop.obj.elements:
            table.append(m.table[m.src.index(x)] if i == 0 else m.dst.index(x))
        return Complement(N, cop, FinSetMor(cop.obj, m.dst, tuple(table)))

    def is_iso(self, f: FinSetMor) -> bool:
        return self.u_injective(f) and self.u_surjective(f)

    def invert(self, f: FinSetMor) -> FinSetMor:
        if not self.is_iso(f):
            raise CosmosError("cannot invert a non-iso")
        table = [0] * len(f.dst.elements)
        for i, t in enumerate(f.table):
            table[t] = i
        return FinSetMor(f.dst, f.src, tuple(table))

    def is_initial(self, A: FinSetObj) -> bool:
        return len(A.elements) == 0

    def zero_mor(self, A: FinSetObj, B: FinSetObj) -> FinSetMor:
        raise CapabilityError("finite sets have no zero morphisms")

    def from_initial(self, dst: FinSetObj) -> FinSetMor:
        return FinSetMor(self.initial(), dst, ())

    def obj_to_json(self, A: FinSetObj) -> dict:
        return {"set": [repr(x) for x in A.elements]}

    def obj_from_json(self, payload: dict) -> FinSetObj:
        return FinSetObj(tuple(_decode_label(s) for s in payload["set"]))

    def mor_to_json(self, f: FinSetMor) -> dict:
        return {"table": list(f.table)}

    def mor_from_json(self, src: FinSetObj, dst: FinSetObj, payload: dict) -> FinSetMor:
        return FinSetMor(src, dst, tuple(payload["table"]))


def _validate_reflexive(cosmos: Cosmos, d0: VMor, d1: VMor, s0: VMor) -> None:
    if d0.src != d1.src or d0.dst != d1.dst:
        raise CosmosError("coequalizer needs a parallel pair")
    if s0.src != d0.dst or s0.dst != d0.src:
        raise CosmosError("section runs the wrong way")
    ident = cosmos.identity(d0.dst)
    if cosmos.compose(s0, d0) != ident or cosmos.compose(s0, d1) != ident:
        raise CosmosError("s0 is not a common section of the pair")


# -- F_p vector spaces ---------------------------------------------------------


class FinVect(Cosmos):
    """Finite-dimensional vector spaces over a fixed prime field."""

    name = "finvect"

    def __init__(self, p: int) -> None:
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise CosmosError(f"{p} is not prime")
        self.p = p

    def _check(self, A: FinVectObj) -> FinVectObj:
        if not isinstance(A, FinVectObj) or A.p != self.p:
            raise CosmosError(f"expected a vector space over F_{self.p}")
        return A

    def obj(self, dim: int) -> FinVectObj:
        return FinVectObj(dim, self.p)

    def mor(self, src: FinVectObj, dst: FinVectObj, rows) -> FinVectMor:
        return FinVectMor(src, dst, tuple(tuple(r) for r in rows))

    def unit(self) -> FinVectObj:
        return self.obj(1)

    def free(self, labels: Sequence) -> FinVectObj:
        return self.obj(len(labels))

    def free_mor(self, src: Sequence, dst: Sequence, fn: dict) -> FinVectMor:
        cols = [list(dst).index(fn[x]) for x in src]
        rows = [[int(c == j) for j in cols] for c in range(len(dst))]
        return self.mor(self.free(src), self.free(dst), rows)

    def basis_element(self, labels: Sequence, x) -> FinVectMor:
        """The point I -> F(labels) picking out the basis vector x."""
        i = list(labels).index(x)
        return self.mor(self.unit(), self.free(labels), [[int(r == i)] for r in range(len(labels))])

    def copair_free(self, labels: Sequence, legs: dict, dst: FinVectObj) -> FinVectMor:
        """The map F(labels) -> dst with column legs[x] at each generator x."""
        labels = list(labels)
        for x in labels:
            if legs[x].src != self.unit() or legs[x].dst != dst:
                raise CosmosError(f"leg at {x!r} is not a point of the target")
        rows = [[legs[x].matrix[r][0] for x in labels] for r in range(dst.dim)]
        return self.mor(self.free(labels), dst, rows)

    def identity(self, A: FinVectObj) -> FinVectMor:
        return self.mor(A, A, [[int(i == j) for j in range(A.dim)] for i in range(A.dim)])

    def compose(self, f: FinVectMor, g: FinVectMor) -> FinVectMor:
        if f.dst != g.src:
            raise CosmosError("non-composable maps")
        rows = [
            [
                sum(g.matrix[i][k] * f.matrix[k][j] for k in range(f.dst.dim)) % self.p
                for j in range(f.src.dim)
            ]
            for i in range(g.dst.dim)
        ]
        return self.mor(f.src, g.dst, rows)

    def tensor_many(self, objs: Sequence[FinVectObj]) -> FinVectObj:
        return self.obj(prod(A.dim for A in objs))

    def tensor_mor_many(self, fs: Sequence[FinVectMor]) -> FinVectMor:
        src = self.tensor_many([f.src for f in fs])
        dst = self.tensor_many([f.dst for f in fs])
        rows = _kron_int([(f.matrix, (f.dst.dim, f.src.dim)) for f in fs])
        return self.mor(src, dst, rows)

    def regroup(self, objs, blocks) -> FinVectMor:
        A = self.tensor_many(list(objs))
        return self.identity(A)

    def unit_insertion(self, objs, positions) -> FinVectMor:
        A = self.tensor_many(list(objs))
        return self.identity(A)

    def coproduct(self, objs: Sequence[FinVectObj]) -> Coproduct:
        objs = list(objs)
        dims = [A.dim for A in objs]
        total = sum(dims)
        C = self.obj(total)
        offsets = [sum(dims[:i]) for i in range(len(dims))]
        injections = [
            self.mor(
                A,
                C,
                [[int(r == offsets[i] + c) for c in range(A.dim)] for r in range(total)],
            )
            for i, A in enumerate(objs)
        ]

        def copair(fs: Sequence[FinVectMor]) -> FinVectMor:
            if len(fs) != len(objs) or any(f.src != A for f, A in zip(fs, objs)):
                raise CosmosError("cocone legs do not match the coproduct")
            dst = fs[0].dst if fs else self.obj(0)
            rows = [
                [x for f in fs for x in f.matrix[r]] for r in range(dst.dim)
            ]
            return self.mor(C, dst, rows)

        return Coproduct(C, injections, copair)

    def _product(self, objs: list[FinVectObj]):
        C = self.coproduct(objs).obj
        dims = [A.dim for A in objs]
        offsets = [sum(dims[:i]) for i in range(len(dims))]
        projections = [
            self.mor(
                C,
                A,
                [[int(c == offsets[i] + r) for c in range(C.dim)] for r in range(A.dim)],
            )
            for i, A in enumerate(objs)
        ]

        def pair(legs: Sequence[FinVectMor]) -> FinVectMor:
            if len(legs) != len(objs):
                raise CosmosError("wrong number of cone legs")
            W = legs[0].src
            rows = [row for leg in legs for row in leg.matrix]
            return self.mor(W, C, rows)

        return C, projections, pair

    def _equalizer(self, f: FinVectMor, g: FinVectMor):
        diff = [
            [(a - b) % self.p for a, b in zip(ra, rb)]
            for ra, rb in zip(f.matrix, g.matrix)
        ]
        basis = p_kernel([list(r) for r in diff], f.src.dim, self.p)
        E = self.obj(len(basis))
        include = self.mor(
            E, f.src, [[basis[c][r] for c in range(len(basis))] for r in range(f.src.dim)]
        )

        def factor(h: FinVectMor) -> FinVectMor:
            X = p_solve_many(
                [list(r) for r in include.matrix],
                [list(r) for r in h.matrix],
                E.dim,
                self.p,
            )
            if X is None:
                raise CosmosError("morphism does not equalize the pair")
            sol = self.mor(h.src, E, X)
            if self.compose(sol, include) != h:
                raise CosmosError("morphism does not equalize the pair")
            return sol

        return E, include, factor

    def _extend_to_basis(self, cols: list[list[int]], n: int) -> list[list[int]]:
        """Standard basis vectors completing ``cols`` to a basis of F_p^n."""
        current = [list(c) for c in cols]
        added = []
        for i in range(n):
            if len(current) == n:
                break
            cand = [int(j == i) for j in range(n)]
            trial = current + [cand]
            if p_rank([list(r) for r in zip(*trial)], len(trial), self.p) == len(trial):
                current.append(cand)
                added.append(cand)
        return added

    def reflexive_coequalizer(self, d0, d1, s0) -> Coequalizer:
        _validate_reflexive(self, d0, d1, s0)
        n = d0.dst.dim
        diff = [
            [(a - b) % self.p for a, b in zip(ra, rb)]
            for ra, rb in zip(d0.matrix, d1.matrix)
        ]
        _, pivots = p_rref([list(r) for r in diff], d0.src.dim, self.p)
        im_basis = [[diff[r][c] for r in range(n)] for c in pivots]
        ext = self._extend_to_basis(im_basis, n)
        P = [list(col) for col in im_basis + ext]  # columns
        P_rows = [[P[c][r] for c in range(n)] for r in range(n)]
        P_inv = p_inv(P_rows, self.p)
        assert P_inv is not None
        r = len(im_basis)
        Q = self.obj(n - r)
        quotient = self.mor(d0.dst, Q, P_inv[r:])

        def mediate(h: FinVectMor) -> FinVectMor:
            rows = [
                [sum(h.matrix[i][k] * ext[c][k] for k in range(n)) % self.p
                 for c in range(n - r)]
                for i in range(h.dst.dim)
            ]
            g = self.mor(Q, h.dst, rows)
            if self.compose(quotient, g) != h:
                raise CosmosError("morphism does not coequalize the pair")
            return g

        return Coequalizer(Q, quotient, mediate)

    def u_elements(self, A: FinVectObj) -> Iterator[FinVectMor]:
        I = self.unit()
        for v in itertools.product(range(self.p), repeat=A.dim):
            yield self.mor(I, A, [[x] for x in v])

    def u_size(self, A: FinVectObj) -> int:
        return self.p**A.dim

    def u_surjective(self, f: FinVectMor) -> bool:
        return p_rank([list(r) for r in f.matrix], f.src.dim, self.p) == f.dst.dim

    def u_injective(self, f: FinVectMor) -> bool:
        return p_rank([list(r) for r in f.matrix], f.src.dim, self.p) == f.src.dim

    def complement(self, m: FinVectMor) -> Complement | None:
        if not self.u_injective(m):
            raise CosmosError("complement asked of a non-mono")
        n = m.dst.dim
        cols = [[m.matrix[r][c] for r in range(n)] for c in range(m.src.dim)]
        ext = self._extend_to_basis(cols, n)
        N = self.obj(len(ext))
        cop = self.coproduct([m.src, N])
        rows = [
            list(m.matrix[r]) + [e[r] for e in ext] for r in range(n)
        ]
        return Complement(N, cop, self.mor(cop.obj, m.dst, rows))

    def is_iso(self, f: FinVectMor) -> bool:
        return f.src.dim == f.dst.dim and self.u_injective(f)

    def invert(self, f: FinVectMor) -> FinVectMor:
        inv = p_inv([list(r) for r in f.matrix], self.p) if f.src.dim == f.dst.dim else None
        if inv is None:
            raise CosmosError("cannot invert a non-iso")
        return self.mor(f.dst, f.src, inv)

    def is_initial(self, A: FinVectObj) -> bool:
        return A.dim == 0

    def zero_mor(self, A: FinVectObj, B: FinVectObj) -> FinVectMor:
        return self.mor(A, B, [[0] * A.dim for _ in range(B.dim)])

    def obj_to_json(self, A: FinVectObj) -> dict:
        return {"dim": A.dim, "p": A.p}

    def obj_from_json(self, payload: dict) -> FinVectObj:
        if payload["p"] != self.p:
            raise CosmosError("field mismatch in payload")
        return self.obj(payload["dim"])

    def mor_to_json(self, f: FinVectMor) -> dict:
        return {"matrix": [list(r) for r in f.matrix]}

    def mor_from_json(self, src: FinVectObj, dst: FinVectObj, payload: dict) -> FinVectMor:
        rows = payload["matrix"]
        if len(rows) != dst.dim or any(len(r) != src.dim for r in rows):
            raise CosmosError("matrix payload has the wrong shape")
        return self.mor(src, dst, rows)


# -- finitely generated abelian groups ----------------------------------------


class FGAb(Cosmos):
    """Finitely generated abelian groups in invariant-factor normal form."""

    name = "fgab"
    certified_cosmos = False  # all properties used are exact; the full
    # closed-structure axioms are not certified by this implementation

    def __init__(self) -> None:
        self._tensor_cache: dict = {}
        self._sum_cache: dict = {}

    def obj(self, free: int, torsion: Sequence[int] = ()) -> FGAbObj:
        return FGAbObj(free, tuple(torsion))

    def mor(self, src: FGAbObj, dst: FGAbObj, rows) -> FGAbMor:
        return FGAbMor(src, dst, tuple(tuple(int(x) for x in r) for r in rows))

    def _mat(self, f: FGAbMor) -> Matrix:
        return Matrix(f.dst.ngen, f.src.ngen, [x for row in f.matrix for x in row])

    def _from_mat(self, src: FGAbObj, dst: FGAbObj, M: Matrix) -> FGAbMor:
        return self.mor(src, dst, [[M[i, j] for j in range(src.ngen)] for i in range(dst.ngen)])

    def unit(self) -> FGAbObj:
        return self.obj(1)

    def free(self, labels: Sequence) -> FGAbObj:
        return self.obj(len(labels))

    def free_mor(self, src: Sequence, dst: Sequence, fn: dict) -> FGAbMor:
        cols = [list(dst).index(fn[x]) for x in src]
        rows = [[int(c == j) for j in cols] for c in range(len(dst))]
        return self.mor(self.free(src), self.free(dst), rows)

    def basis_element(self, labels: Sequence, x) -> FGAbMor:
        """The point Z -> F(labels) picking out the generator x."""
        i = list(labels).index(x)
        return self.mor(self.unit(), self.free(labels), [[int(r == i)] for r in range(len(labels))])

    def copair_free(self, labels: Sequence, legs: dict, dst: FGAbObj) -> FGAbMor:
        """The map F(labels) -> dst with column legs[x] at each generator x."""
        labels = list(labels)
        for x in labels:
            if legs[x].src != self.unit() or legs[x].dst != dst:
                raise CosmosError(f"leg at {x!r} is not a point of the target")
        rows = [[legs[x].matrix[r][0] for x in labels] for r in range(dst.ngen)]
        return self.mor(self.free(labels), dst, rows)

    def identity(self, A: FGAbObj) -> FGAbMor:
        return self.mor(A, A, [[int(i == j) for j in range(A.ngen)] for i in range(A.ngen)])

    def compose(self, f: FGAbMor, g: FGAbMor) -> FGAbMor:
        if f.dst != g.src:
            raise CosmosError("non-composable maps")
        return self._from_mat(f.src, g.dst, self._mat(g) @ self._mat(f))

    # -- presentations ---------------------------------------------------

    def _normalize(
        self, ngens: int, rel_cols: Sequence[Sequence[int]]
    ) -> tuple[FGAbObj, Matrix, Matrix]:
        """Normalize Z^ngens / <columns>; returns (obj, to_normal, from_normal).

        ``to_normal`` (obj.ngen x ngens) sends a presentation generator to
        its class; ``from_normal`` (ngens x obj.ngen) is a section picking
        representatives, with to_normal @ from_normal = id.
        """
        R = Matrix(ngens, len(rel_cols), [c[i] for i in range(ngens) for c in rel_cols])
        S, U, _ = snf(R)
        k = min(S.shape)
        orders = [abs(S[i, i]) if i < k else 0 for i in range(ngens)]
        free_rows = [i for i in range(ngens) if orders[i] == 0]
        torsion_rows = [i for i in range(ngens) if orders[i] > 1]
        obj = self.obj(len(free_rows), [orders[i] for i in torsion_rows])
        kept = free_rows + torsion_rows
        to_normal = U[kept, :] if kept else Matrix(0, ngens, [])
        Uinv = U.inv()
        if any(x != int(x) for x in Uinv):
            raise ArithmeticError("unimodular inverse not integral")
        from_normal = Uinv[:, kept] if kept else Matrix(ngens, 0, [])
        return obj, to_normal, from_normal

    def _sum(self, objs: tuple[FGAbObj, ...]):
        if objs not in self._sum_cache:
            orders = [o for A in objs for o in A.orders()]
            self._sum_cache[objs] = self._normalize(len(orders), _diag_cols(orders))
        return self._sum_cache[objs]

    def _tensor(self, objs: tuple[FGAbObj, ...]):
        if objs not in self._tensor_cache:
            if len(objs) == 1:
                A = objs[0]
                eye = Matrix.eye(A.ngen)
                self._tensor_cache[objs] = (A, eye, eye)
            else:
                gen_orders = [
                    _gcd_many(combo)
                    for combo in itertools.product(*[A.orders() for A in objs])
                ]
                self._tensor_cache[objs] = self._normalize(
                    len(gen_orders), _diag_cols(gen_orders)
                )
        return self._tensor_cache[objs]

    def tensor_many(self, objs: Sequence[FGAbObj]) -> FGAbObj:
        return self._tensor(tuple(objs))[0]

    def tensor_mor_many(self, fs: Sequence[FGAbMor]) -> FGAbMor:
        srcs = tuple(f.src for f in fs)
        dsts = tuple(f.dst for f in fs)
        src_obj, _, from_src = self._tensor(srcs)
        dst_obj, to_dst, _ = self._tensor(dsts)
        raw = _kron_int([(f.matrix, (f.dst.ngen, f.src.ngen)) for f in fs])
        raw_m = Matrix(
            prod(d.ngen for d in dsts),
            prod(s.ngen for s in srcs),
            [x for row in raw for x in row],
        )
        return self._from_mat(src_obj, dst_obj, to_dst @ raw_m @ from_src)

    def regroup(self, objs, blocks) -> FGAbMor:
        objs = tuple(objs)
        src_obj, _, from_src = self._tensor(objs)
        grouped = tuple(self.tensor_many([objs[i] for i in b]) for b in blocks)
        dst_obj, to_dst, _ = self._tensor(grouped)
        mats = []
        for b in blocks:
            _, to_block, _ = self._tensor(tuple(objs[i] for i in b))
            rows = tuple(
                tuple(to_block[i, j] for j in range(to_block.cols))
                for i in range(to_block.rows)
            )
            mats.append((rows, to_block.shape))
        step = _kron_int(mats)
        step_m = Matrix(
            prod(g.ngen for g in grouped),
            prod(A.ngen for A in objs),
            [x for row in step for x in row],
        )
        out = self._from_mat(src_obj, dst_obj, to_dst @ step_m @ from_src)
        if not self.is_iso(out):
            raise ArithmeticError("regrouping failed to be an isomorphism")
        return out

    def unit_insertion(self, objs, positions) -> FGAbMor:
        objs = tuple(objs)
        src_obj, _, from_src = self._tensor(objs)
        result: list[FGAbObj | None] = [None] * (len(objs) + len(positions))
        for pos in positions:
            result[pos] = self.unit()
        rest = iter(objs)
        result = tuple(next(rest) if A is None else A for A in result)
        dst_obj, to_dst, _ = self._tensor(result)
        posset = set(positions)
        src_gens = list(itertools.product(*[range(A.ngen) for A in objs]))
        dst_gens = list(itertools.product(*[range(A.ngen) for A in result]))
        dst_index = {g: i for i, g in enumerate(dst_gens)}
        P = Matrix.zeros(len(dst_gens), len(src_gens))
        for j, g in enumerate(src_gens):
            coords = iter(g)
            lifted = tuple(
                0 if i in posset else next(coords) for i in range(len(result))
            )
            P[dst_index[lifted], j] = 1
        out = self._from_mat(src_obj, dst_obj, to_dst @ P @ from_src)
        if not self.is_iso(out):
            raise ArithmeticError("unit insertion failed to be an isomorphism")
        return out

    def coproduct(self, objs: Sequence[FGAbObj]) -> Coproduct:
        objs_t = tuple(objs)
        if len(objs_t) == 1:
            return _identity_coproduct(self, objs_t[0])
        C, to_n, from_n = self._sum(objs_t)
        sizes = [A.ngen for A in objs_t]
        offsets = [sum(sizes[:i]) for i in range(len(sizes))]
        injections = [
            self._from_mat(A, C, to_n[:, offsets[i]: offsets[i] + A.ngen])
            for i, A in enumerate(objs_t)
        ]

        def copair(fs: Sequence[FGAbMor]) -> FGAbMor:
            if len(fs) != len(objs_t) or any(f.src != A for f, A in zip(fs, objs_t)):
                raise CosmosError("cocone legs do not match the coproduct")
            dst = fs[0].dst if fs else self.obj(0)
            if any(f.dst != dst for f in fs):
                raise CosmosError("cocone legs must share a target")
            raw = Matrix.zeros(dst.ngen, sum(sizes))
            for i, f in enumerate(fs):
                raw[:, offsets[i]: offsets[i] + f.src.ngen] = self._mat(f)
            return self._from_mat(C, dst, raw @ from_n)

        return Coproduct(C, injections, copair)

    def _product(self, objs: list[FGAbObj]):
        objs_t = tuple(objs)
        C, to_n, from_n = self._sum(objs_t)
        sizes = [A.ngen for A in objs_t]
        offsets = [sum(sizes[:i]) for i in range(len(sizes))]
        projections = [
            self._from_mat(C, A, from_n[offsets[i]: offsets[i] + A.ngen, :])
            for i, A in enumerate(objs_t)
        ]

        def pair(legs: Sequence[FGAbMor]) -> FGAbMor:
            if len(legs) != len(objs_t):
                raise CosmosError("wrong number of cone legs")
            W = legs[0].src if legs else self.obj(0)
            raw = Matrix.zeros(sum(sizes), W.ngen)
            for i, leg in enumerate(legs):
                raw[offsets[i]: offsets[i] + leg.dst.ngen, :] = self._mat(leg)
            return self._from_mat(W, C, to_n @ raw)

        return C, projections, pair

    def _preimage_lattice(self, M: Matrix, dst: FGAbObj) -> Matrix:
        """Basis of {x : M x lies in the relation lattice of dst}."""
        orders = dst.orders()
        cols = [i for i in range(dst.ngen) if orders[i] > 0]
        D = Matrix.zeros(dst.ngen, len(cols))
        for c, i in enumerate(cols):
            D[i, c] = orders[i]
        K = int_kernel(M.row_join(D))
        G = K[: M.cols, :]
        return lattice_basis(G)

    def _equalizer(self, f: FGAbMor, g: FGAbMor):
        A, Bo = f.src, f.dst
        M = self._mat(f) - self._mat(g)
        B = self._preimage_lattice(M, Bo)
        rel_cols = []
        for j, o in enumerate(A.orders()):
            if o > 0:
                rhs = Matrix.zeros(A.ngen, 1)
                rhs[j, 0] = o
                z = int_solve(B, rhs)
                assert z is not None, "relation lattice escaped the preimage"
                rel_cols.append([z[i, 0] for i in range(B.cols)])
        K, to_n, from_n = self._normalize(B.cols, rel_cols)
        include = self._from_mat(K, A, B @ from_n)

        def factor(h: FGAbMor) -> FGAbMor:
            H = self._mat(h)
            cols = []
            for j in range(h.src.ngen):
                z = int_solve(B, H[:, j])
                if z is None:
                    raise CosmosError("morphism does not equalize the pair")
                cols.append(z)
            Z = Matrix.zeros(B.cols, h.src.ngen)
            for j, z in enumerate(cols):
                Z[:, j] = z
            sol = self._from_mat(h.src, K, to_n @ Z)
            if self.compose(sol, include) != h:
                raise CosmosError("morphism does not equalize the pair")
            return sol

        return K, include, factor

    def _cokernel(self, f: FGAbMor):
        """Presentation-level cokernel: (obj, quotient, mediate)."""
        Bo = f.dst
        rel_cols = _diag_cols(Bo.orders())
        M = self._mat(f)
        for j in range(f.src.ngen):
            rel_cols.append([M[i, j] for i in range(Bo.ngen)])
        Q, to_n, from_n = self._normalize(Bo.ngen, rel_cols)
        quotient = self._from_mat(Bo, Q, to_n)

        def mediate(h: FGAbMor) -> FGAbMor:
            out = self._from_mat(Q, h.dst, self._mat(h) @ from_n)
            if self.compose(quotient, out) != h:
                raise CosmosError("morphism does not kill the image")
            return out

        return Q, quotient, mediate

    def reflexive_coequalizer(self, d0, d1, s0) -> Coequalizer:
        _validate_reflexive(self, d0, d1, s0)
        diff = self.mor(
            d0.src,
            d0.dst,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(d0.matrix, d1.matrix)
            ],
        )
        Q, quotient, mediate = self._cokernel(diff)
        return Coequalizer(Q, quotient, mediate)

    def u_elements(self, A: FGAbObj) -> Iterator[FGAbMor]:
        if A.free > 0:
            raise CapabilityError(
                f"cannot enumerate points of a group with free rank {A.free}"
            )
        I = self.unit()
        for v in itertools.product(*[range(d) for d in A.torsion]):
            yield self.mor(I, A, [[x] for x in v])

    def u_size(self, A: FGAbObj) -> int:
        if A.free > 0:
            raise CapabilityError("infinite underlying set")
        return prod(A.torsion) if A.torsion else 1

    def u_surjective(self, f: FGAbMor) -> bool:
        Q, _, _ = self._cokernel(f)
        return Q == self.obj(0)

    def u_injective(self, f: FGAbMor) -> bool:
        K, _, _ = self._equalizer(f, self.zero_mor(f.src, f.dst))
        return K == self.obj(0)

    def complement(self, m: FGAbMor) -> Complement | None:
        if not self.u_injective(m):
            raise CosmosError("complement asked of a non-mono")
        A, B = m.src, m.dst
        nA, nB = A.ngen, B.ngen
        oA, oB = A.orders(), B.orders()
        M = m.matrix
        # unknown retraction entries R[i][j], flattened as i * nB + j
        rows: list[list[int]] = []
        rhs: list[int] = []
        moduli: list[int] = []
        for j in range(nB):
            if oB[j] == 0:
                continue
            for i in range(nA):
                row = [0] * (nA * nB)
                row[i * nB + j] = oB[j]
                rows.append(row)
                rhs.append(0)
                moduli.append(oA[i])
        for a in range(nA):
            for i in range(nA):
                row = [0] * (nA * nB)
                for j in range(nB):
                    row[i * nB + j] = M[j][a]
                rows.append(row)
                rhs.append(int(i == a))
                moduli.append(oA[i])
        sol = int_solve_mod(
            Matrix(len(rows), nA * nB, [x for r in rows for x in r]),
            Matrix(len(rhs), 1, rhs),
            moduli,
        )
        if sol is None:
            return None
        retraction = self.mor(
            B, A, [[sol[i * nB + j, 0] for j in range(nB)] for i in range(nA)]
        )
        N, quotient, _ = self._cokernel(m)
        cop = self.coproduct([A, N])
        _, _, pair = self._product([A, N])
        phi = pair([retraction, quotient])
        if not self.is_iso(phi):
            raise ArithmeticError("splitting produced a non-iso")
        return Complement(N, cop, self.invert(phi))

    def is_iso(self, f: FGAbMor) -> bool:
        return self.u_injective(f) and self.u_surjective(f)

    def invert(self, f: FGAbMor) -> FGAbMor:
        M = self._mat(f)
        cols = []
        for j in range(f.dst.ngen):
            rhs = Matrix.zeros(f.dst.ngen, 1)
            rhs[j, 0] = 1
            x = int_solve_mod(M, rhs, list(f.dst.orders()))
            if x is None:
                raise CosmosError("cannot invert a non-iso")
            cols.append(x)
        G = Matrix.zeros(f.src.ngen, f.dst.ngen)
        for j, c in enumerate(cols):
            G[:, j] = c
        g = self._from_mat(f.dst, f.src, G)
        if self.compose(f, g) != self.identity(f.src) or self.compose(
            g, f
        ) != self.identity(f.dst):
            raise CosmosError("cannot invert a non-iso")
        return g

    def is_initial(self, A: FGAbObj) -> bool:
        return A == self.obj(0)

    def zero_mor(self, A: FGAbObj, B: FGAbObj) -> FGAbMor:
        return self.mor(A, B, [[0] * A.ngen for _ in range(B.ngen)])

    def obj_to_json(self, A: FGAbObj) -> dict:
        return {"free": A.free, "torsion": list(A.torsion)}

    def obj_from_json(self, payload: dict) -> FGAbObj:
        return self.obj(payload["free"], payload["torsion"])

    def mor_to_json(self, f: FGAbMor) -> dict:
        return {"matrix": [list(r) for r in f.matrix]}

    def mor_from_json(self, src: FGAbObj, dst: FGAbObj, payload: dict) -> FGAbMor:
        rows = payload["matrix"]
        if len(rows) != dst.ngen or any(len(r) != src.ngen for r in rows):
            raise CosmosError("matrix payload has the wrong shape")
        return self.mor(src, dst, rows)


def _gcd_many(xs: Sequence[int]) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def _diag_cols(orders: Sequence[int]) -> list[list[int]]:
    n = len(orders)
    return [
        [orders[i] if j == i else 0 for j in range(n)]
        for i in range(n)
        if orders[i] > 0
    ]


def cosmos_by_name(name: str, p: int = 2) -> Cosmos:
    """Look up an instance by its CLI name."""
    if name == "finset":
        return FinSet()
    if name == "finvect":
        return FinVect(p)
    if name == "fgab":
        return FGAb()
    raise CosmosError(f"unknown cosmos instance {name!r}")
