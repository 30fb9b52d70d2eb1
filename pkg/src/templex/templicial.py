"""Quiver-valued simplicial structure without outer face maps.

A templicial object (X, S) over a cosmos V is a family of quivers
X_0, ..., X_D on a fixed vertex set S together with

* inner face morphisms      d_j : X_n -> X_{n-1}      (0 < j < n),
* degeneracy morphisms      s_i : X_n -> X_{n+1}      (0 <= i <= n),
* comultiplications    mu_{k,l} : X_{k+l} -> X_k (x)_S X_l,
* an invertible counit     eps : X_0 -> I_S,

subject to the simplicial identities among the d's and s's, naturality
of mu against both, coassociativity, and counitality.  Outer faces are
deliberately absent: the comultiplications record instead how a simplex
splits through each intermediate vertex, which is what lets the notion
live over a base category without diagonal maps.

Everything is truncated at a finite dimension D and exact.  ``validate``
decides the axioms by comparing composite quiver morphisms on the nose,
``free_templicial`` and ``underlying_sset`` implement the adjunction
with truncated simplicial sets, ``eval_necklace``/``eval_neckmap``
evaluate the induced functor on necklaces, and the degeneracy machinery
(``degenerate_part``, ``has_nondegenerates``, ``ez_decompose``)
computes honest colimits in the base.
"""

from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

from .cosmos import CapabilityError, Cosmos, CosmosError
from .necklace import Necklace, NeckMap, active_inert_factor
from .quiver import (
    TensorQuiver,
    VQuiver,
    VQuiverMor,
    compose_quiver_mors,
    identity_quiver_mor,
    invert_quiver_mor,
    is_quiver_iso,
    pushforward,
    pushforward_colax,
    pushforward_compose_iso,
    pushforward_mor,
    pushforward_unit_colax,
    quiver_coproduct,
    quiver_regroup,
    quiver_unit_insertion,
    tensor_quiver_mors,
    unit_quiver,
)
from .simplexcat import (
    OrdMap,
    coface,
    compose as ord_compose,
    degeneracy,
    enumerate_surjections,
    generator_word,
    identity as ord_identity,
    is_interval,
    split_interval,
)
from .sset import FinSimpSet


class TemplicialError(ValueError):
    """Raised for ill-typed templicial data or unsupported queries."""


class TruncationError(TemplicialError):
    """A construction needed a simplex level beyond the truncation."""

    def __init__(self, needed: int, D: int, what: str):
        super().__init__(f"{what} needs dimension {needed}, but the object is truncated at D={D}")
        self.needed = needed
        self.D = D


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance, named by law and offending indices.

    >>> str(Violation("mu s naturality", (1, 1, 0)))
    'mu s naturality at (1, 1, 0)'
    """

    law: str
    indices: tuple

    def __str__(self) -> str:
        return f"{self.law} at {self.indices}"


def _chain(*mors: VQuiverMor) -> VQuiverMor:
    return reduce(compose_quiver_mors, mors)


class Templicial:
    """A truncated templicial object given by explicit structure morphisms.

    ``levels`` lists the quivers X_0, ..., X_D.  ``face`` maps (n, j) with
    0 < j < n to d_j, ``degen`` maps (n, i) with 0 <= i <= n < D to s_i,
    ``comult`` maps (k, l) with k + l <= D to mu_{k,l} (landing in the
    two-factor tensor quiver), and ``counit`` is eps.  Construction checks
    shapes only; the axioms are a separate, reportable question answered
    by :func:`validate`.
    """

    def __init__(
        self,
        cosmos: Cosmos,
        vertices: Sequence,
        levels: Sequence[VQuiver],
        face: dict,
        degen: dict,
        comult: dict,
        counit: VQuiverMor,
        check: bool = True,
    ):
        self.cosmos = cosmos
        self.vertices = tuple(vertices)
        self.levels = list(levels)
        self.D = len(self.levels) - 1
        self.face = dict(face)
        self.degen = dict(degen)
        self.comult = dict(comult)
        self.counit = counit
        self._tensors: dict = {}
        self._identities: dict = {}
        self._deg_parts: dict = {}
        self._nondeg = None
        if check:
            self._typecheck()

    # -- bookkeeping ------------------------------------------------------

    def _typecheck(self) -> None:
        if not self.levels:
            raise TemplicialError("a templicial object needs at least X_0")
        for n, Q in enumerate(self.levels):
            if not isinstance(Q, VQuiver) or Q.cosmos is not self.cosmos:
                raise TemplicialError(f"level {n} is not a quiver over the given cosmos")
            if Q.vertices != self.vertices:
                raise TemplicialError(f"level {n} lives over the wrong vertex set")
        want = {(n, j) for n in range(2, self.D + 1) for j in range(1, n)}
        if set(self.face) != want:
            raise TemplicialError("inner face maps must be indexed by 0 < j < n <= D")
        for (n, j), m in self.face.items():
            if m.src != self.levels[n] or m.dst != self.levels[n - 1]:
                raise TemplicialError(f"face ({n}, {j}) is ill-typed")
        want = {(n, i) for n in range(self.D) for i in range(n + 1)}
        if set(self.degen) != want:
            raise TemplicialError("degeneracies must be indexed by 0 <= i <= n < D")
        for (n, i), m in self.degen.items():
            if m.src != self.levels[n] or m.dst != self.levels[n + 1]:
                raise TemplicialError(f"degeneracy ({n}, {i}) is ill-typed")
        want = {(k, l) for k in range(self.D + 1) for l in range(self.D + 1 - k)}
        if set(self.comult) != want:
            raise TemplicialError("comultiplications must be indexed by k, l >= 0 with k + l <= D")
        for (k, l), m in self.comult.items():
            if m.src != self.levels[k + l] or m.dst != self.pair_quiver(k, l):
                raise TemplicialError(f"comultiplication ({k}, {l}) is ill-typed")
        I = unit_quiver(self.cosmos, self.vertices)
        if self.counit.src != self.levels[0] or self.counit.dst != I:
            raise TemplicialError("counit must map X_0 to the unit quiver")

    def level(self, n: int) -> VQuiver:
        if not 0 <= n <= self.D:
            raise TruncationError(n, self.D, "level X_n")
        return self.levels[n]

    def d(self, n: int, j: int) -> VQuiverMor:
        if n > self.D:
            raise TruncationError(n, self.D, f"face d_{j}")
        if (n, j) not in self.face:
            raise TemplicialError(f"d_{j} on X_{n} is not an inner face")
        return self.face[(n, j)]

    def s(self, n: int, i: int) -> VQuiverMor:
        if n + 1 > self.D:
            raise TruncationError(n + 1, self.D, f"degeneracy s_{i}")
        if (n, i) not in self.degen:
            raise TemplicialError(f"s_{i} is not defined on X_{n}")
        return self.degen[(n, i)]

    def mu(self, k: int, l: int) -> VQuiverMor:
        if k + l > self.D:
            raise TruncationError(k + l, self.D, f"comultiplication mu_({k},{l})")
        if (k, l) not in self.comult:
            raise TemplicialError(f"mu_({k},{l}) is not defined")
        return self.comult[(k, l)]

    def tensor_of(self, dims: tuple) -> TensorQuiver:
        """The cached tensor quiver X_{dims[0]} (x)_S ... (x)_S X_{dims[-1]}."""
        dims = tuple(dims)
        for k in dims:
            if k > self.D:
                raise TruncationError(k, self.D, "tensor factor")
        if dims not in self._tensors:
            self._tensors[dims] = TensorQuiver([self.levels[k] for k in dims])
        return self._tensors[dims]

    def pair_quiver(self, k: int, l: int) -> VQuiver:
        return self.tensor_of((k, l)).quiver

    def id_level(self, n: int) -> VQuiverMor:
        if n not in self._identities:
            self._identities[n] = identity_quiver_mor(self.level(n))
        return self._identities[n]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Templicial)
            and self.cosmos is other.cosmos
            and self.vertices == other.vertices
            and self.levels == other.levels
            and self.face == other.face
            and self.degen == other.degen
            and self.comult == other.comult
            and self.counit == other.counit
        )

    def __repr__(self) -> str:
        return (
            f"Templicial(D={self.D}, vertices={list(self.vertices)!r}, "
            f"over {type(self.cosmos).__name__})"
        )


# -- axiom validation -----------------------------------------------------


def validate(X: Templicial) -> list[Violation]:
    """Check every axiom instance up to the truncation; return all failures.

    An empty report means X is a genuine templicial object.  Each failure
    names the law and the indices at which the two composite quiver
    morphisms differ, so a mutated structure map points straight at the
    equations it breaks.
    """
    out: list[Violation] = []
    if not is_quiver_iso(X.counit):
        out.append(Violation("counit iso", ()))

    # d_i d_j = d_{j-1} d_i for i < j (inner indices on both sides)
    for n in range(2, X.D + 1):
        for j in range(2, n):
            for i in range(1, j):
                lhs = _chain(X.d(n, j), X.d(n - 1, i))
                rhs = _chain(X.d(n, i), X.d(n - 1, j - 1))
                if lhs != rhs:
                    out.append(Violation("d d", (n, i, j)))

    # d_i s_j: shift, identity, identity, shift
    for n in range(X.D):
        for j in range(n + 1):
            for i in range(1, n + 1):
                lhs = _chain(X.s(n, j), X.d(n + 1, i))
                if i < j:
                    rhs = _chain(X.d(n, i), X.s(n - 1, j - 1))
                elif i in (j, j + 1):
                    rhs = X.id_level(n)
                else:
                    rhs = _chain(X.d(n, i - 1), X.s(n - 1, j))
                if lhs != rhs:
                    out.append(Violation("d s", (n, i, j)))

    # s_i s_j = s_{j+1} s_i for i <= j, written diagrammatically
    for n in range(X.D - 1):
        for j in range(n + 1):
            for i in range(j + 1, n + 2):
                lhs = _chain(X.s(n, j), X.s(n + 1, i))
                rhs = _chain(X.s(n, i - 1), X.s(n + 1, j))
                if lhs != rhs:
                    out.append(Violation("s s", (n, j, i)))

    # naturality of mu against inner faces
    for n in range(2, X.D + 1):
        for k in range(n):
            l = n - 1 - k
            for j in range(1, n):
                lhs = _chain(X.d(n, j), X.mu(k, l))
                if j <= k:
                    rhs = _chain(
                        X.mu(k + 1, l),
                        tensor_quiver_mors([X.d(k + 1, j), X.id_level(l)]),
                    )
                else:
                    rhs = _chain(
                        X.mu(k, l + 1),
                        tensor_quiver_mors([X.id_level(k), X.d(l + 1, j - k)]),
                    )
                if lhs != rhs:
                    out.append(Violation("mu d naturality", (k, l, j)))

    # naturality of mu against degeneracies
    for n in range(X.D):
        for k in range(n + 2):
            l = n + 1 - k
            for i in range(n + 1):
                lhs = _chain(X.s(n, i), X.mu(k, l))
                if i < k:
                    rhs = _chain(
                        X.mu(k - 1, l),
                        tensor_quiver_mors([X.s(k - 1, i), X.id_level(l)]),
                    )
                else:
                    rhs = _chain(
                        X.mu(k, l - 1),
                        tensor_quiver_mors([X.id_level(k), X.s(l - 1, i - k)]),
                    )
                if lhs != rhs:
                    out.append(Violation("mu s naturality", (k, l, i)))

    # coassociativity, compared in the flat three-factor tensor
    for n in range(X.D + 1):
        for r in range(n + 1):
            for s in range(n + 1 - r):
                t = n - r - s
                flat = [X.level(r), X.level(s), X.level(t)]
                right = _chain(
                    X.mu(r, s + t),
                    tensor_quiver_mors([X.id_level(r), X.mu(s, t)]),
                    invert_quiver_mor(quiver_regroup(flat, [[0], [1, 2]])),
                )
                left = _chain(
                    X.mu(r + s, t),
                    tensor_quiver_mors([X.mu(r, s), X.id_level(t)]),
                    invert_quiver_mor(quiver_regroup(flat, [[0, 1], [2]])),
                )
                if left != right:
                    out.append(Violation("coassociativity", (r, s, t)))

    # counitality on both sides
    for n in range(X.D + 1):
        strip_right = invert_quiver_mor(quiver_unit_insertion([X.level(n)], [1]))
        if _chain(X.mu(n, 0), tensor_quiver_mors([X.id_level(n), X.counit]), strip_right) != X.id_level(n):
            out.append(Violation("right counitality", (n,)))
        strip_left = invert_quiver_mor(quiver_unit_insertion([X.level(n)], [0]))
        if _chain(X.mu(0, n), tensor_quiver_mors([X.counit, X.id_level(n)]), strip_left) != X.id_level(n):
            out.append(Violation("left counitality", (n,)))

    return out


# -- functorial actions ---------------------------------------------------


def level_action(X: Templicial, g: OrdMap) -> VQuiverMor:
    """X applied to an interval map g, as a morphism X_{cod g} -> X_{dom g}.

    Interval maps (monotone, preserving both endpoints) are exactly the
    simplex-category arrows a templicial object knows how to act on: their
    generator words use inner faces only.
    """
    if g.cod > X.D or g.dom > X.D:
        raise TruncationError(max(g.cod, g.dom), X.D, "simplex-category action")
    if not is_interval(g):
        raise TemplicialError(f"{g} is not an interval map; outer faces are not available")
    out = X.id_level(g.cod)
    dim = g.cod
    for kind, idx in reversed(generator_word(g)):
        if kind == "s":
            out = compose_quiver_mors(out, X.s(dim, idx))
            dim += 1
        else:
            out = compose_quiver_mors(out, X.d(dim, idx))
            dim -= 1
    assert dim == g.dom
    return out


def derived_comult(X: Templicial, ks: Sequence[int], fold: str = "left") -> VQuiverMor:
    """The iterated comultiplication X_n -> X_{k_1} (x)_S ... (x)_S X_{k_m}.

    ``fold`` picks the bracketing ("left" merges the first two factors
    first, "right" the last two); coassociativity says the answer cannot
    depend on it, which is how the validator's invariance test is phrased.
    """
    ks = tuple(ks)
    n = sum(ks)
    if n > X.D:
        raise TruncationError(n, X.D, "derived comultiplication")
    if not ks:
        return X.counit
    if len(ks) == 1:
        return X.id_level(ks[0])
    if fold == "left":
        merged = (ks[0] + ks[1],) + ks[2:]
        mors = [X.mu(ks[0], ks[1])] + [X.id_level(k) for k in ks[2:]]
        blocks = [[0, 1]] + [[i] for i in range(2, len(ks))]
    elif fold == "right":
        merged = ks[:-2] + (ks[-2] + ks[-1],)
        mors = [X.id_level(k) for k in ks[:-2]] + [X.mu(ks[-2], ks[-1])]
        blocks = [[i] for i in range(len(ks) - 2)] + [[len(ks) - 2, len(ks) - 1]]
    else:
        raise TemplicialError(f"unknown fold {fold!r}")
    inner = derived_comult(X, merged, fold)
    spread = tensor_quiver_mors(mors)
    flat = [X.level(k) for k in ks]
    return _chain(inner, spread, invert_quiver_mor(quiver_regroup(flat, blocks)))


# -- free objects ---------------------------------------------------------


def free_templicial(K: FinSimpSet, cosmos: Cosmos) -> Templicial:
    """Levelwise free templicial object on a truncated simplicial set.

    X_n(a, b) is free on the n-cells of K running from vertex a to vertex
    b; inner faces and degeneracies are induced cellwise, and mu_{k,l}
    sends a cell to (front k-face) tensor (back l-face) at the middle
    vertex it passes through.
    """
    D = K.D
    S = tuple(K.cells[0])
    lab: list[dict] = []
    for n in range(D + 1):
        at_pair: dict = {}
        for x in K.cells[n]:
            pair = (K.vertex(n, x, 0), K.vertex(n, x, n))
            at_pair.setdefault(pair, []).append(x)
        lab.append(at_pair)

    levels = [
        VQuiver(cosmos, S, {pair: cosmos.free(xs) for pair, xs in lab[n].items()})
        for n in range(D + 1)
    ]

    def induced(n: int, m: int, table: dict) -> VQuiverMor:
        comps = {
            pair: cosmos.free_mor(xs, lab[m].get(pair, []), {x: table[x] for x in xs})
            for pair, xs in lab[n].items()
        }
        return VQuiverMor(levels[n], levels[m], comps)

    face = {
        (n, j): induced(n, n - 1, K.face[(n, j)])
        for n in range(2, D + 1)
        for j in range(1, n)
    }
    degen = {
        (n, i): induced(n, n + 1, K.degen[(n, i)])
        for n in range(D)
        for i in range(n + 1)
    }

    comult = {}
    for k in range(D + 1):
        for l in range(D + 1 - k):
            n = k + l
            TQ = TensorQuiver([levels[k], levels[l]])
            comps = {}
            for (a, b), xs in lab[n].items():
                legs = {}
                for x in xs:
                    c = K.vertex(n, x, k)
                    front = K.act(OrdMap(tuple(range(k + 1)), n), x)
                    back = K.act(OrdMap(tuple(k + t for t in range(l + 1)), n), x)
                    point = cosmos.pair_elements(
                        [
                            cosmos.basis_element(lab[k][(a, c)], front),
                            cosmos.basis_element(lab[l][(c, b)], back),
                        ]
                    )
                    legs[x] = cosmos.compose(point, TQ.injection(a, b, (c,)))
                comps[(a, b)] = cosmos.copair_free(xs, legs, TQ.quiver(a, b))
            comult[(k, l)] = VQuiverMor(levels[n], TQ.quiver, comps)

    I = unit_quiver(cosmos, S)
    counit = VQuiverMor(
        levels[0],
        I,
        {
            (a, a): cosmos.copair_free([a], {a: cosmos.identity(cosmos.unit())}, cosmos.unit())
            for a in S
        },
    )
    return Templicial(cosmos, S, levels, face, degen, comult, counit)


# -- morphisms ------------------------------------------------------------


class TemplicialMor:
    """A morphism (X, S) -> (Y, T): a vertex map plus quiver morphisms.

    The data is f : S -> T together with alpha_n : f_!(X_n) -> Y_n for
    each level, required to commute with faces, degeneracies,
    comultiplications (through the pushforward's colax structure) and
    counits.  Construction validates by default, so library-made
    morphisms are correct or loudly rejected.
    """

    def __init__(
        self,
        src: Templicial,
        dst: Templicial,
        f: dict,
        alpha: Sequence[VQuiverMor],
        check: bool = True,
    ):
        if src.cosmos is not dst.cosmos:
            raise TemplicialError("source and target live over different cosmoi")
        if src.D != dst.D:
            raise TemplicialError("source and target have different truncations")
        if set(f) != set(src.vertices) or any(v not in dst.vertices for v in f.values()):
            raise TemplicialError("vertex map does not match the vertex sets")
        self.src = src
        self.dst = dst
        self.f = dict(f)
        self.alpha = list(alpha)
        if len(self.alpha) != src.D + 1:
            raise TemplicialError("need one level component per dimension")
        for n, a in enumerate(self.alpha):
            pushed = pushforward(self.f, src.level(n), dst.vertices).quiver
            if a.src != pushed or a.dst != dst.level(n):
                raise TemplicialError(f"level component {n} is ill-typed")
        if check:
            problems = validate_templicial_mor(self)
            if problems:
                raise TemplicialError(
                    "not a templicial morphism: " + "; ".join(str(p) for p in problems)
                )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TemplicialMor)
            and self.src == other.src
            and self.dst == other.dst
            and self.f == other.f
            and self.alpha == other.alpha
        )

    def __repr__(self) -> str:
        return f"TemplicialMor(D={self.src.D}, {len(self.src.vertices)} -> {len(self.dst.vertices)} vertices)"


def validate_templicial_mor(phi: TemplicialMor) -> list[Violation]:
    """All commutation failures of a candidate templicial morphism."""
    X, Y, f = phi.src, phi.dst, phi.f
    T = Y.vertices
    out = []
    for (n, j), dmor in X.face.items():
        lhs = _chain(pushforward_mor(f, dmor, T), phi.alpha[n - 1])
        if lhs != _chain(phi.alpha[n], Y.d(n, j)):
            out.append(Violation("mor face", (n, j)))
    for (n, i), smor in X.degen.items():
        lhs = _chain(pushforward_mor(f, smor, T), phi.alpha[n + 1])
        if lhs != _chain(phi.alpha[n], Y.s(n, i)):
            out.append(Violation("mor degeneracy", (n, i)))
    for (k, l), m in X.comult.items():
        rhs = _chain(
            pushforward_mor(f, m, T),
            pushforward_colax(f, X.level(k), X.level(l), T),
            tensor_quiver_mors([phi.alpha[k], phi.alpha[l]]),
        )
        if _chain(phi.alpha[k + l], Y.mu(k, l)) != rhs:
            out.append(Violation("mor comultiplication", (k, l)))
    rhs = _chain(
        pushforward_mor(f, X.counit, T),
        pushforward_unit_colax(X.cosmos, f, X.vertices, T),
    )
    if _chain(phi.alpha[0], Y.counit) != rhs:
        out.append(Violation("mor counit", ()))
    return out


def identity_templicial_mor(X: Templicial) -> TemplicialMor:
    f = {a: a for a in X.vertices}
    return TemplicialMor(X, X, f, [X.id_level(n) for n in range(X.D + 1)])


def compose_templicial_mors(phi: TemplicialMor, psi: TemplicialMor) -> TemplicialMor:
    """Diagrammatic composite: first phi, then psi."""
    if phi.dst != psi.src:
        raise TemplicialError("non-composable templicial morphisms")
    X, Z = phi.src, psi.dst
    f, g = phi.f, psi.f
    h = {a: g[f[a]] for a in X.vertices}
    alpha = [
        _chain(
            pushforward_compose_iso(f, g, X.level(n), phi.dst.vertices, Z.vertices),
            pushforward_mor(g, phi.alpha[n], Z.vertices),
            psi.alpha[n],
        )
        for n in range(X.D + 1)
    ]
    return TemplicialMor(X, Z, h, alpha)


def is_templicial_iso(phi: TemplicialMor) -> bool:
    """True when the vertex map is a bijection and every level is invertible."""
    values = list(phi.f.values())
    if len(set(values)) != len(values) or set(values) != set(phi.dst.vertices):
        return False
    return all(is_quiver_iso(a) for a in phi.alpha)


# -- evaluation on necklaces ----------------------------------------------


def eval_necklace(X: Templicial, T: Necklace) -> VQuiver:
    """X_T: the flat tensor of bead levels (the unit quiver for no beads)."""
    beads = tuple(T.beads())
    for b in beads:
        if b > X.D:
            raise TruncationError(b, X.D, f"bead of {T}")
    if not beads:
        return unit_quiver(X.cosmos, X.vertices)
    return X.tensor_of(beads).quiver


def _unit_to_unit_tensor(X: Templicial, m: int) -> VQuiverMor:
    """The canonical iso I_S -> I_S (x)_S ... (x)_S I_S with m factors."""
    cosmos, S = X.cosmos, X.vertices
    I = unit_quiver(cosmos, S)
    if m == 1:
        return identity_quiver_mor(I)
    TQ = TensorQuiver([I] * m)
    comps = {
        (a, a): cosmos.compose(
            cosmos.unit_insertion([], list(range(m))),
            TQ.injection(a, a, (a,) * (m - 1)),
        )
        for a in S
    }
    return VQuiverMor(I, TQ.quiver, comps)


def _eval_inert(X: Templicial, g: NeckMap) -> VQuiverMor:
    # g forgets joints (identity underlying map); X(g) comultiplies each
    # coarse bead into the finer beads sitting inside it
    M, coarse = g.src, g.dst
    if not coarse.beads():
        return identity_quiver_mor(unit_quiver(X.cosmos, X.vertices))
    parts = []
    flat_dims: list[int] = []
    blocks = []
    for (u0, u1) in coarse.bead_intervals():
        inner = [t for t in M.joints if u0 <= t <= u1]
        sizes = tuple(b - a for a, b in zip(inner, inner[1:]))
        parts.append(derived_comult(X, sizes))
        blocks.append(list(range(len(flat_dims), len(flat_dims) + len(sizes))))
        flat_dims.extend(sizes)
    whole = tensor_quiver_mors(parts)
    flat = [X.level(k) for k in flat_dims]
    return compose_quiver_mors(whole, invert_quiver_mor(quiver_regroup(flat, blocks)))


def _eval_active(X: Templicial, g: NeckMap) -> VQuiverMor:
    # g is joint-surjective; X(g) acts on each source bead by the interval
    # restriction of the underlying map, routing collapsed beads through
    # the counit's inverse
    Ts = g.src
    sizes = Ts.beads()
    if not sizes:
        return identity_quiver_mor(unit_quiver(X.cosmos, X.vertices))
    pieces = []
    rest = g.f
    for idx, size in enumerate(sizes):
        if idx == len(sizes) - 1:
            pieces.append(rest)
        else:
            piece, rest = split_interval(rest, size, sum(sizes[idx + 1 :]))
            pieces.append(piece)
    inv_eps = invert_quiver_mor(X.counit)
    slot_mors = []
    collapsed = []
    for idx, piece in enumerate(pieces):
        action = level_action(X, piece)
        if piece.cod == 0:
            collapsed.append(idx)
            action = compose_quiver_mors(inv_eps, action)
        slot_mors.append(action)
    live = [X.level(p.cod) for p in pieces if p.cod > 0]
    if live:
        intro = quiver_unit_insertion(live, collapsed)
    else:
        intro = _unit_to_unit_tensor(X, len(pieces))
    return compose_quiver_mors(intro, tensor_quiver_mors(slot_mors))


def eval_neckmap(X: Templicial, f: NeckMap) -> VQuiverMor:
    """X(f): X_{dst f} -> X_{src f}, contravariantly in the necklace map.

    Factors f as active-then-inert and evaluates the two halves: the
    inert part comultiplies, the active part acts by faces, degeneracies
    and counit inverses.
    """
    for b in f.src.beads() + f.dst.beads():
        if b > X.D:
            raise TruncationError(b, X.D, "necklace bead")
    act, inert = active_inert_factor(f)
    return compose_quiver_mors(_eval_inert(X, inert), _eval_active(X, act))


# -- necklace-category packaging ------------------------------------------


@dataclass
class NecCat:
    """A necklace category presented by evaluation callables.

    ``at`` evaluates an object on a necklace, ``act`` on a necklace map
    (contravariantly), ``pairing`` gives the multiplication isomorphism
    X_T (x)_S X_U -> X_{T v U}, and ``unit_iso`` the unit I_S -> X_{pt}.
    Everything is computed lazily so the (infinite) necklace category
    never needs materialising.
    """

    cosmos: Cosmos
    vertices: tuple
    D: int
    at: Callable[[Necklace], VQuiver]
    act: Callable[[NeckMap], VQuiverMor]
    pairing: Callable[[Necklace, Necklace], VQuiverMor]
    unit_iso: Callable[[], VQuiverMor]


def _strip_unit(X: Templicial, Q: VQuiver, position: int) -> VQuiverMor:
    """The iso (I_S (x) Q) -> Q or (Q (x) I_S) -> Q, by unit position."""
    cosmos = X.cosmos
    I = unit_quiver(cosmos, X.vertices)
    factors = [I, Q] if position == 0 else [Q, I]
    TQ = TensorQuiver(factors)
    comps = {}
    for a in X.vertices:
        for b in X.vertices:

            def leg(mid, a=a, b=b):
                return cosmos.invert(cosmos.unit_insertion([Q(a, b)], [position]))

            comps[(a, b)] = TQ.copair(a, b, leg, dst=Q(a, b))
    return VQuiverMor(TQ.quiver, Q, comps)


def _pairing_iso(X: Templicial, T: Necklace, U: Necklace) -> VQuiverMor:
    bt, bu = tuple(T.beads()), tuple(U.beads())
    if bt and bu:
        flat = [X.level(k) for k in bt + bu]
        blocks = [list(range(len(bt))), list(range(len(bt), len(bt) + len(bu)))]
        return invert_quiver_mor(quiver_regroup(flat, blocks))
    if bt:
        return _strip_unit(X, eval_necklace(X, T), 1)
    if bu:
        return _strip_unit(X, eval_necklace(X, U), 0)
    return _strip_unit(X, unit_quiver(X.cosmos, X.vertices), 0)


def to_necklace_cat(X: Templicial) -> NecCat:
    """Package X as its necklace category, evaluated on demand."""
    return NecCat(
        cosmos=X.cosmos,
        vertices=X.vertices,
        D=X.D,
        at=lambda T: eval_necklace(X, T),
        act=lambda f: eval_neckmap(X, f),
        pairing=lambda T, U: _pairing_iso(X, T, U),
        unit_iso=lambda: identity_quiver_mor(unit_quiver(X.cosmos, X.vertices)),
    )


# -- degenerate simplices --------------------------------------------------


def degenerate_part(X: Templicial, n: int) -> tuple[VQuiver, VQuiverMor]:
    """X^deg_n with its canonical morphism into X_n.

    The colimit over proper surjections [n] ->> [k] is computed as a
    reflexive coequalizer of two coproducts, one summand per surjection
    and one per composable pair.
    """
    if not 0 <= n <= X.D:
        raise TruncationError(n, X.D, "degenerate part")
    if n in X._deg_parts:
        return X._deg_parts[n]
    cosmos, S = X.cosmos, X.vertices
    if n == 0:
        empty = VQuiver(cosmos, S, {})
        result = (empty, VQuiverMor(empty, X.level(0), {}))
        X._deg_parts[n] = result
        return result

    objs = [s for k in range(n) for s in enumerate_surjections(n, k)]
    obj_index = {s: i for i, s in enumerate(objs)}
    arrows = [
        (s, t)
        for s in objs
        for k2 in range(s.cod + 1)
        for t in enumerate_surjections(s.cod, k2)
    ]
    obj_cop = quiver_coproduct(cosmos, S, [X.level(s.cod) for s in objs])
    arr_cop = quiver_coproduct(cosmos, S, [X.level(t.cod) for (_, t) in arrows])

    d0 = arr_cop.copair(
        [obj_cop.injections[obj_index[ord_compose(s, t)]] for (s, t) in arrows],
        dst=obj_cop.quiver,
    )
    d1 = arr_cop.copair(
        [
            compose_quiver_mors(level_action(X, t), obj_cop.injections[obj_index[s]])
            for (s, t) in arrows
        ],
        dst=obj_cop.quiver,
    )
    arrow_index = {st: i for i, st in enumerate(arrows)}
    s0 = obj_cop.copair(
        [arr_cop.injections[arrow_index[(s, ord_identity(s.cod))]] for s in objs],
        dst=arr_cop.quiver,
    )
    cocone = obj_cop.copair([level_action(X, s) for s in objs], dst=X.level(n))

    deg_hom = {}
    into_comps = {}
    for a in S:
        for b in S:
            coeq = cosmos.reflexive_coequalizer(d0(a, b), d1(a, b), s0(a, b))
            deg_hom[(a, b)] = coeq.obj
            into_comps[(a, b)] = coeq.mediate(cocone(a, b))
    deg = VQuiver(cosmos, S, deg_hom)
    result = (deg, VQuiverMor(deg, X.level(n), into_comps))
    X._deg_parts[n] = result
    return result


@dataclass
class NondegStatus:
    """Verdict of the search for complements of the degenerate parts.

    ``complements`` maps each level to (X^nd_n, inclusion into X_n);
    ``failures`` lists (level, vertex pair, reason) where no direct
    complement exists or the canonical map is not even a mono.
    """

    ok: bool
    complements: dict
    failures: list


def has_nondegenerates(X: Templicial) -> NondegStatus:
    """Try to split X_n = X^deg_n + X^nd_n at every level, with witnesses."""
    if X._nondeg is not None:
        return X._nondeg
    complements = {}
    failures = []
    for n in range(X.D + 1):
        deg, into = degenerate_part(X, n)
        nd_hom = {}
        incl = {}
        broken = False
        for pair, m in into.components.items():
            try:
                comp = X.cosmos.complement(m)
            except CosmosError as exc:
                failures.append((n, pair, str(exc)))
                broken = True
                continue
            if comp is None:
                failures.append((n, pair, "no direct complement"))
                broken = True
                continue
            nd_hom[pair] = comp.obj
            incl[pair] = X.cosmos.compose(comp.coproduct.injections[1], comp.iso)
        if not broken:
            nd = VQuiver(X.cosmos, X.vertices, nd_hom)
            complements[n] = (nd, VQuiverMor(nd, X.level(n), incl))
    status = NondegStatus(not failures, complements, failures)
    X._nondeg = status
    return status


@dataclass
class EZWitness:
    """An explicit decomposition X_n = sum over surjections of X^nd_k."""

    n: int
    summands: list  # (surjection [n] ->> [k], k) in enumeration order
    quiver: VQuiver
    iso: VQuiverMor
    is_iso: bool


def ez_decompose(X: Templicial, n: int) -> EZWitness:
    """Assemble the levelwise decomposition of X_n by non-degenerate parts.

    Requires complements at every level up to n; the witness morphism is
    the copairing of (include X^nd_k, then act by the surjection), and
    ``is_iso`` records whether it is invertible as it must be when the
    complements genuinely split off the degenerate part.
    """
    status = has_nondegenerates(X)
    missing = [k for k in range(n + 1) if k not in status.complements]
    if missing:
        raise TemplicialError(
            f"no chosen complement at level(s) {missing}; the object has no"
            " non-degenerate decomposition there"
        )
    sigmas = [s for k in range(n + 1) for s in enumerate_surjections(n, k)]
    cop = quiver_coproduct(
        X.cosmos, X.vertices, [status.complements[s.cod][0] for s in sigmas]
    )
    legs = []
    for s in sigmas:
        _, incl = status.complements[s.cod]
        legs.append(_chain(incl, level_action(X, s)))
    iso = cop.copair(legs, dst=X.level(n))
    return EZWitness(n, [(s, s.cod) for s in sigmas], cop.quiver, iso, is_quiver_iso(iso))


# -- the underlying simplicial set -----------------------------------------


def comult_point(X: Templicial, k: int, l: int, a, b, xi):
    """mu_{k,l} applied to a point of X_{k+l}(a, b)."""
    return X.cosmos.compose(xi, X.mu(k, l)(a, b))


def tensor_point(X: Templicial, k: int, l: int, a, c, b, beta, gamma):
    """The point beta (x) gamma of (X_k (x)_S X_l)(a, b) at middle vertex c."""
    cosmos = X.cosmos
    TQ = X.tensor_of((k, l))
    paired = cosmos.pair_elements([beta, gamma])
    if (c,) in TQ.paths(a, b):
        return cosmos.compose(paired, TQ.injection(a, b, (c,)))
    return cosmos.compose(paired, cosmos.from_initial(TQ.quiver(a, b)))


def middle_support(X: Templicial, k: int, l: int, a, b, xi) -> list:
    """Middle vertices where mu_{k,l}(xi) has a nonzero block.

    Only meaningful over an additive base; the cartesian instance has no
    zero morphisms to project with and raises a capability error.
    """
    cosmos = X.cosmos
    TQ = X.tensor_of((k, l))
    point = comult_point(X, k, l, a, b, xi)
    support = []
    for c in X.vertices:
        if (c,) not in TQ.paths(a, b):
            continue
        target = TQ.summand(a, b, (c,))

        def leg(mid, c=c, target=target):
            if mid == (c,):
                return cosmos.identity(target)
            return cosmos.zero_mor(TQ.summand(a, b, mid), target)

        block = cosmos.compose(point, TQ.copair(a, b, leg, dst=target))
        if block != cosmos.zero_mor(cosmos.unit(), target):
            support.append(c)
    return support


def tensor_point_preimages(X: Templicial, k: int, l: int, a, b, xi) -> list:
    """All pure-tensor decompositions of mu_{k,l}(xi), as (c, beta, gamma).

    Over a base with finite hom objects the search is exhaustive.  Over
    finitely generated abelian groups with infinitely many points the
    decompositions of a rank-one block are enumerated up to the unit
    regauging (beta, gamma) ~ (-beta, -gamma), normalising the first
    coefficient to be positive; other infinite shapes raise a capability
    error.
    """
    cosmos = X.cosmos
    target = comult_point(X, k, l, a, b, xi)
    try:
        found = []
        for c in X.vertices:
            betas = list(cosmos.u_elements(X.level(k)(a, c)))
            gammas = list(cosmos.u_elements(X.level(l)(c, b)))
            for beta in betas:
                for gamma in gammas:
                    if tensor_point(X, k, l, a, c, b, beta, gamma) == target:
                        found.append((c, beta, gamma))
        return found
    except CapabilityError:
        found = []

    support = middle_support(X, k, l, a, b, xi)
    if len(support) > 1:
        # a pure tensor lives in a single middle-vertex block
        return []
    if not support:
        raise CapabilityError(
            "the comultiplied point is zero; factorizations are not finitely"
            " enumerable over this base"
        )
    (c,) = support
    A, B = X.level(k)(a, c), X.level(l)(c, b)
    if (
        getattr(A, "free", None) != 1
        or getattr(B, "free", None) != 1
        or getattr(A, "torsion", ()) != ()
        or getattr(B, "torsion", ()) != ()
    ):
        raise CapabilityError("factorization search needs rank-one free blocks")
    TQ = X.tensor_of((k, l))
    summand = TQ.summand(a, b, (c,))

    def block_leg(mid, summand=summand):
        if mid == (c,):
            return cosmos.identity(summand)
        return cosmos.zero_mor(TQ.summand(a, b, mid), summand)

    block = cosmos.compose(target, TQ.copair(a, b, block_leg, dst=summand))
    n = block.matrix[0][0]
    for m in range(1, abs(n) + 1):
        if n % m == 0:
            beta = cosmos.mor(cosmos.unit(), A, [[m]])
            gamma = cosmos.mor(cosmos.unit(), B, [[n // m]])
            if tensor_point(X, k, l, a, c, b, beta, gamma) == target:
                found.append((c, beta, gamma))
    return found


def _coherent_families(X: Templicial, verts: tuple, points: dict) -> list[dict]:
    """All families (alpha_{i,j}) compatible with the comultiplications."""
    n = len(verts) - 1
    pairs = sorted(
        ((i, j) for i in range(n + 1) for j in range(i + 1, n + 1)),
        key=lambda p: (p[1] - p[0], p[0]),
    )
    out: list[dict] = []

    def extend(idx: int, chosen: dict) -> None:
        if idx == len(pairs):
            out.append(dict(chosen))
            return
        i, j = pairs[idx]
        for cand in points[(j - i, verts[i], verts[j])]:
            ok = True
            for k in range(i + 1, j):
                lhs = comult_point(X, k - i, j - k, verts[i], verts[j], cand)
                rhs = tensor_point(
                    X, k - i, j - k, verts[i], verts[k], verts[j],
                    chosen[(i, k)], chosen[(k, j)],
                )
                if lhs != rhs:
                    ok = False
                    break
            if ok:
                chosen[(i, j)] = cand
                extend(idx + 1, chosen)
                del chosen[(i, j)]

    extend(0, {})
    return out


def underlying_sset(X: Templicial) -> FinSimpSet:
    """The underlying truncated simplicial set of a templicial object.

    An n-simplex is a vertex tuple (a_0, ..., a_n) together with points
    alpha_{i,j} of X_{j-i}(a_i, a_j) such that every comultiplication
    takes alpha_{i,j} to alpha_{i,k} (x) alpha_{k,j}; faces and
    degeneracies act by interval restriction.  Needs every hom object to
    have finitely enumerable points.
    """
    cosmos, S, D = X.cosmos, X.vertices, X.D
    if not is_quiver_iso(X.counit):
        raise TemplicialError("underlying simplicial set needs an invertible counit")
    inv_eps = invert_quiver_mor(X.counit)
    unit_pt = {a: inv_eps(a, a) for a in S}

    points = {}
    index_of = {}
    for m in range(D + 1):
        for a in S:
            for b in S:
                pts = list(cosmos.u_elements(X.level(m)(a, b)))
                points[(m, a, b)] = pts
                index_of[(m, a, b)] = {pt: i for i, pt in enumerate(pts)}

    cells = {0: tuple(S)}
    families: dict = {0: {a: ((a,), {}) for a in S}}

    for n in range(1, D + 1):
        labels = []
        fam_at = {}
        for verts in itertools.product(S, repeat=n + 1):
            for fam in _coherent_families(X, verts, points):
                key = tuple(
                    index_of[(j - i, verts[i], verts[j])][fam[(i, j)]]
                    for i in range(n + 1)
                    for j in range(i + 1, n + 1)
                )
                label = (verts, key)
                labels.append(label)
                fam_at[label] = (verts, fam)
        cells[n] = tuple(labels)
        families[n] = fam_at

    def act_label(g: OrdMap, label):
        verts, fam = families[g.cod][label]
        m = g.dom
        new_verts = tuple(verts[g(t)] for t in range(m + 1))
        if m == 0:
            return new_verts[0]
        key = []
        for t in range(m + 1):
            for u in range(t + 1, m + 1):
                gt, gu = g(t), g(u)
                base = unit_pt[verts[gt]] if gt == gu else fam[(gt, gu)]
                restr = OrdMap(tuple(g(t + s) - gt for s in range(u - t + 1)), gu - gt)
                comp = level_action(X, restr)(verts[gt], verts[gu])
                pt = cosmos.compose(base, comp)
                key.append(index_of[(u - t, new_verts[t], new_verts[u])][pt])
        return (new_verts, tuple(key))

    face = {}
    for n in range(1, D + 1):
        for i in range(n + 1):
            g = coface(i, n)
            face[(n, i)] = {x: act_label(g, x) for x in cells[n]}
    degen = {}
    for n in range(D):
        for i in range(n + 1):
            g = degeneracy(i, n)
            degen[(n, i)] = {x: act_label(g, x) for x in cells[n]}
    return FinSimpSet(D, cells, face, degen)


# -- JSON serialisation ----------------------------------------------------


def _decode(text: str):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def _components_json(cosmos: Cosmos, mor: VQuiverMor) -> list:
    items = []
    for (a, b) in sorted(mor.components, key=lambda p: (repr(p[0]), repr(p[1]))):
        comp = mor.components[(a, b)]
        if cosmos.is_initial(comp.src):
            continue
        items.append([repr(a), repr(b), cosmos.mor_to_json(comp)])
    return items


def templicial_to_json(X: Templicial) -> dict:
    """A lossless JSON-ready description of the object.

    Vertex and set labels are stored through ``repr`` so tuples survive a
    round trip; morphism payloads delegate to the cosmos.
    """
    cosmos = X.cosmos
    levels = []
    for Q in X.levels:
        entries = []
        for (a, b) in sorted(Q.hom, key=lambda p: (repr(p[0]), repr(p[1]))):
            obj = Q.hom[(a, b)]
            if cosmos.is_initial(obj):
                continue
            entries.append([repr(a), repr(b), cosmos.obj_to_json(obj)])
        levels.append(entries)
    return {
        "vertices": [repr(v) for v in X.vertices],
        "D": X.D,
        "levels": levels,
        "face": [
            [n, j, _components_json(cosmos, X.face[(n, j)])]
            for n in range(2, X.D + 1)
            for j in range(1, n)
        ],
        "degen": [
            [n, i, _components_json(cosmos, X.degen[(n, i)])]
            for n in range(X.D)
            for i in range(n + 1)
        ],
        "comult": [
            [k, l, _components_json(cosmos, X.comult[(k, l)])]
            for k in range(X.D + 1)
            for l in range(X.D + 1 - k)
        ],
        "counit": _components_json(cosmos, X.counit),
    }


def templicial_from_json(cosmos: Cosmos, payload: dict) -> Templicial:
    """Rebuild a templicial object written by :func:`templicial_to_json`."""
    verts = tuple(_decode(s) for s in payload["vertices"])
    D = payload["D"]
    if len(payload["levels"]) != D + 1:
        raise TemplicialError("level count does not match the declared truncation")
    levels = []
    for entries in payload["levels"]:
        hom = {
            (_decode(a), _decode(b)): cosmos.obj_from_json(obj)
            for a, b, obj in entries
        }
        levels.append(VQuiver(cosmos, verts, hom))

    def read_mor(entries: list, src: VQuiver, dst: VQuiver) -> VQuiverMor:
        comps = {}
        for a_s, b_s, m in entries:
            a, b = _decode(a_s), _decode(b_s)
            comps[(a, b)] = cosmos.mor_from_json(src(a, b), dst(a, b), m)
        return VQuiverMor(src, dst, comps)

    face = {
        (n, j): read_mor(entries, levels[n], levels[n - 1])
        for n, j, entries in payload["face"]
    }
    degen = {
        (n, i): read_mor(entries, levels[n], levels[n + 1])
        for n, i, entries in payload["degen"]
    }
    comult = {
        (k, l): read_mor(entries, levels[k + l], TensorQuiver([levels[k], levels[l]]).quiver)
        for k, l, entries in payload["comult"]
    }
    counit = read_mor(payload["counit"], levels[0], unit_quiver(cosmos, verts))
    return Templicial(cosmos, verts, levels, face, degen, comult, counit)
