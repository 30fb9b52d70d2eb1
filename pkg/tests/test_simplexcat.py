import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from templex.simplexcat import (
    OrdMap,
    SimplexError,
    coface,
    compose,
    degeneracy,
    enumerate_injections,
    enumerate_interval_maps,
    enumerate_maps,
    enumerate_surjections,
    epi_mono_factor,
    generator_word,
    identity,
    is_interval,
    monoidal_sum,
    split_interval,
)


def apply_word(word, dom):
    f = identity(dom)
    for kind, idx in word:
        step = degeneracy(idx, f.cod - 1) if kind == "s" else coface(idx, f.cod + 1)
        f = compose(f, step)
    return f


def test_rejects_non_monotone_table():
    with pytest.raises(SimplexError):
        OrdMap((0, 2, 1), 2)


def test_rejects_table_outside_codomain():
    with pytest.raises(SimplexError):
        OrdMap((0, 3), 2)


def test_coface_degeneracy_tables():
    assert coface(0, 1).targets == (1,)
    assert coface(2, 2).targets == (0, 1)
    assert degeneracy(1, 2).targets == (0, 1, 1, 2)


def test_compose_coface_then_degeneracy_is_identity():
    # collapsing the vertex just inserted recovers the identity
    assert compose(coface(1, 2), degeneracy(1, 1)) == identity(1)


def test_simplicial_relation_cofaces():
    # delta_j delta_i = delta_i delta_{j-1} for i < j (maps [n-2] -> [n])
    n = 4
    for i, j in product(range(n + 1), repeat=2):
        if i < j:
            lhs = compose(coface(i, n - 1), coface(j, n))
            rhs = compose(coface(j - 1, n - 1), coface(i, n))
            assert lhs == rhs


def test_simplicial_relation_mixed():
    # sigma_j delta_i for the three regimes, as maps [n+1] -> [n] composites
    n = 3
    for i in range(n + 2):
        for j in range(n + 1):
            f = compose(coface(i, n + 1), degeneracy(j, n))
            if i < j:
                assert f == compose(degeneracy(j - 1, n - 1), coface(i, n))
            elif i in (j, j + 1):
                assert f == identity(n)
            else:
                assert f == compose(degeneracy(j, n - 1), coface(i - 1, n))


def test_composition_associative_exhaustive_small():
    sizes = range(3)
    for m, n, p, q in product(sizes, repeat=4):
        for f in enumerate_maps(m, n):
            for g in enumerate_maps(n, p):
                fg = compose(f, g)
                for h in enumerate_maps(p, q):
                    assert compose(fg, h) == compose(f, compose(g, h))


@st.composite
def composable_triple(draw):
    dims = [draw(st.integers(min_value=0, max_value=5)) for _ in range(4)]
    maps = []
    for m, n in zip(dims, dims[1:]):
        table = tuple(sorted(
            draw(st.integers(min_value=0, max_value=n)) for _ in range(m + 1)
        ))
        maps.append(OrdMap(table, n))
    return maps


@given(composable_triple())
def test_composition_associative_random(triple):
    f, g, h = triple
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_identity_neutral():
    f = OrdMap((0, 0, 2), 3)
    assert compose(identity(2), f) == f
    assert compose(f, identity(3)) == f


def test_is_interval():
    assert is_interval(OrdMap((0, 1, 1), 1))
    assert is_interval(OrdMap((0, 2), 2), 2)
    assert not is_interval(OrdMap((0, 1), 2))
    assert not is_interval(OrdMap((1, 2), 2))
    assert not is_interval(OrdMap((0, 2), 2), 3)


def test_interval_maps_closed_under_composition():
    for f in enumerate_interval_maps(2, 3):
        for g in enumerate_interval_maps(3, 2):
            assert is_interval(compose(f, g))


def test_monoidal_sum_of_identities():
    assert monoidal_sum(identity(1), identity(2)) == identity(3)


def test_monoidal_sum_unit_is_zero_ordinal():
    f = OrdMap((0, 0, 1), 1)
    assert monoidal_sum(identity(0), f) == f
    assert monoidal_sum(f, identity(0)) == f


def test_monoidal_sum_rejects_non_interval():
    with pytest.raises(SimplexError):
        monoidal_sum(OrdMap((0, 1), 2), identity(1))


def test_split_interval_frozen_example():
    f1, f2 = split_interval(OrdMap((0, 1, 1), 1), 1, 1)
    assert f1 == identity(1)
    assert (f2.targets, f2.cod) == ((0, 0), 0)


def test_split_then_sum_roundtrip_exhaustive():
    for n in range(4):
        for m in range(4):
            for f in enumerate_interval_maps(m, n):
                for k in range(m + 1):
                    f1, f2 = split_interval(f, k, m - k)
                    assert monoidal_sum(f1, f2) == f


def test_split_is_unique():
    # any interval pair summing to f must be the canonical split
    f = OrdMap((0, 0, 1, 3), 3)
    for k in range(f.dom + 1):
        f1, f2 = split_interval(f, k, f.dom - k)
        candidates = [
            (g1, g2)
            for g1 in enumerate_interval_maps(k, f1.cod)
            for g2 in enumerate_interval_maps(f.dom - k, f2.cod)
            if monoidal_sum(g1, g2) == f
        ]
        assert candidates == [(f1, f2)]


def test_sum_then_split_roundtrip():
    a = OrdMap((0, 1, 1, 2), 2)
    b = OrdMap((0, 0, 3), 3)
    f = monoidal_sum(a, b)
    assert split_interval(f, a.dom, b.dom) == (a, b)


def test_surjection_counts_binomial():
    # monotone surjections [n] ->> [k] pick which adjacent pairs collapse
    for n in range(6):
        for k in range(n + 1):
            assert len(enumerate_surjections(n, k)) == math.comb(n, k)


def test_surjection_tables_frozen():
    assert [f.targets for f in enumerate_surjections(2, 1)] == [(0, 0, 1), (0, 1, 1)]
    assert [f.targets for f in enumerate_surjections(3, 1)] == [
        (0, 0, 0, 1),
        (0, 0, 1, 1),
        (0, 1, 1, 1),
    ]


def test_injection_counts_binomial():
    for n in range(6):
        for m in range(n + 1):
            assert len(enumerate_injections(m, n)) == math.comb(n + 1, m + 1)


def test_enumeration_is_lexicographic():
    tables = [f.targets for f in enumerate_maps(1, 2)]
    assert tables == sorted(tables)
    assert len(tables) == 6


def test_epi_mono_factorization():
    for m in range(4):
        for n in range(4):
            for f in enumerate_maps(m, n):
                epi, mono = epi_mono_factor(f)
                assert epi.is_surjective()
                assert mono.is_injective()
                assert compose(epi, mono) == f


def test_epi_mono_factorization_unique():
    f = OrdMap((0, 0, 2, 2), 3)
    epi, mono = epi_mono_factor(f)
    found = [
        (e, m)
        for k in range(f.dom + 1)
        for e in enumerate_surjections(f.dom, k)
        for m in enumerate_injections(k, f.cod)
        if compose(e, m) == f
    ]
    assert found == [(epi, mono)]


def test_generator_word_reconstructs_map():
    for m in range(4):
        for n in range(4):
            for f in enumerate_maps(m, n):
                assert apply_word(generator_word(f), m) == f


def test_generator_word_of_identity_is_empty():
    assert generator_word(identity(3)) == []


def test_json_roundtrip():
    f = OrdMap((0, 0, 2), 4)
    assert OrdMap.from_json(f.to_json()) == f
    assert f.to_json() == {"dom": 2, "cod": 4, "map": [0, 0, 2]}


def test_json_rejects_mismatched_domain():
    with pytest.raises(SimplexError):
        OrdMap.from_json({"dom": 3, "cod": 2, "map": [0, 1]})
