from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import ordinal_maps
from oracles import monotone_values
from declab.ordinal import (
    CompositionError,
    OrdinalMap,
    codegeneracy,
    coface,
    compose,
    empty_map,
    enumerate_maps,
    ez_factor,
    identity,
    injections,
    ordinal_map,
    ordinal_sum_map,
    ordinal_sum_obj,
    split_at,
    surjections,
    verify_split_uniqueness,
)


def m(vals, cod):
    return ordinal_map(vals, cod)


class TestConstruction:
    def test_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            OrdinalMap(1, 1, (1, 0))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            OrdinalMap(0, 1, (2,))

    def test_only_empty_map_targets_minus_one(self):
        with pytest.raises(ValueError):
            OrdinalMap(0, -1, (0,))
        assert OrdinalMap(-1, -1, ()) == identity(-1)

    def test_flat_round_trip(self):
        beta = m((0, 1, 3), 3)
        assert beta.flat() == [2, 3, 0, 1, 3]
        assert OrdinalMap.from_flat(beta.flat()) == beta
        assert empty_map(2).flat() == [-1, 2]


class TestCompose:
    def test_identity_law(self):
        assert compose(identity(2), coface(2, 1)) == coface(2, 1)

    def test_section(self):
        assert compose(codegeneracy(0, 0), coface(1, 1)) == identity(0)

    def test_pointwise_example(self):
        assert compose(coface(2, 0), codegeneracy(1, 0)) == m((1, 1, 2), 2)
        assert compose(coface(2, 2), codegeneracy(1, 1)) == m((0, 1, 1), 2)

    def test_mismatch(self):
        with pytest.raises(CompositionError):
            compose(identity(1), identity(2))

    def test_associative_exhaustive(self):
        for a in range(4):
            for b in range(4):
                for c in range(4):
                    for f in enumerate_maps(a, b):
                        for g in enumerate_maps(b, c):
                            assert compose(g, compose(f, identity(a))) == compose(g, f)
                            assert compose(identity(c), compose(g, f)) == compose(g, f)
        for f in enumerate_maps(1, 2):
            for g in enumerate_maps(2, 2):
                for h in enumerate_maps(2, 3):
                    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


class TestOrdinalSum:
    @pytest.mark.parametrize("k,l,want", [(0, 0, 1), (-1, 5, 5), (2, 3, 6)])
    def test_objects(self, k, l, want):
        assert ordinal_sum_obj(k, l) == want

    def test_coface_split(self):
        # d^k = id_[i] + d^{k-i-1} for i < k
        for n in range(4):
            for k in range(n + 2):
                for i in range(k):
                    assert ordinal_sum_map(identity(i), coface(n - i, k - i - 1)) == coface(n + 1, k)

    def test_unit(self):
        beta = m((0, 2), 3)
        assert ordinal_sum_map(identity(-1), beta) == beta
        assert ordinal_sum_map(beta, identity(-1)) == beta

    def test_blockwise(self):
        assert ordinal_sum_map(m((0, 1), 1), m((1,), 1)) == m((0, 1, 3), 3)

    def test_bifunctor(self):
        objs = range(-1, 3)
        for a0 in objs:
            for a1 in objs:
                for a2 in objs:
                    for f in enumerate_maps(a0, a1):
                        for g in enumerate_maps(a1, a2):
                            for c in objs:
                                for h in enumerate_maps(c, c):
                                    lhs = ordinal_sum_map(compose(g, f), compose(h, h))
                                    rhs = compose(ordinal_sum_map(g, h), ordinal_sum_map(f, h))
                                    assert lhs == rhs


class TestSplit:
    def test_coface_example(self):
        assert split_at(coface(3, 2), 1) == (1, identity(1), coface(1, 0))

    @pytest.mark.parametrize("k", range(-1, 5))
    def test_identity(self, k):
        for i in range(-1, k + 1):
            assert split_at(identity(k), i) == (i, identity(i), identity(k - i - 1))

    def test_empty_first_block(self):
        j, b1, b2 = split_at(m((2, 2), 2), 1)
        assert j == -1 and b1 == empty_map(1) and b2 == m((0, 0), 0)

    def test_range(self):
        with pytest.raises(ValueError):
            split_at(identity(2), 3)
        with pytest.raises(ValueError):
            split_at(identity(2), -2)

    @given(ordinal_maps(), st.data())
    def test_round_trip(self, beta, data):
        i = data.draw(st.integers(-1, beta.cod))
        j, b1, b2 = split_at(beta, i)
        assert b1.cod == i and b1.dom == j
        assert ordinal_sum_map(b1, b2) == beta

    def test_uniqueness_exhaustive(self):
        assert verify_split_uniqueness(5)

    def test_uniqueness_by_target_blocks(self):
        # each gamma: [l] -> [i1 + 1 + i2] splits once with first codomain [i1]
        for i1 in range(-1, 6):
            for i2 in range(-1, 6 - i1):
                k = i1 + 1 + i2
                for l in range(-1, 4):
                    for gamma in enumerate_maps(l, k):
                        hits = [
                            (j, a1, a2)
                            for j in range(-1, l + 1)
                            for a1 in enumerate_maps(j, i1)
                            for a2 in enumerate_maps(l - j - 1, i2)
                            if ordinal_sum_map(a1, a2) == gamma
                        ]
                        assert hits == [split_at(gamma, i1)]


class TestGenerators:
    def test_examples(self):
        assert coface(1, 0) == m((1,), 1)
        assert codegeneracy(0, 0) == m((0, 0), 0)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            coface(2, 3)
        with pytest.raises(ValueError):
            codegeneracy(1, 2)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_cosimplicial_identities(self, n):
        for j in range(n + 1):
            for i in range(j):
                assert compose(coface(n + 1, j), coface(n, i)) == compose(coface(n + 1, i), coface(n, j - 1))
        for i in range(n):
            assert compose(codegeneracy(n - 1, i), coface(n, i)) == identity(n - 1)
            assert compose(codegeneracy(n - 1, i), coface(n, i + 1)) == identity(n - 1)


class TestEZ:
    def test_examples(self):
        assert ez_factor(identity(3)) == (identity(3), identity(3))
        assert ez_factor(m((1, 1), 2)) == (m((1,), 2), m((0, 0), 0))
        assert ez_factor(m((0, 0, 2), 2)) == (m((0, 2), 2), m((0, 0, 1), 1))

    def test_unique_exhaustive(self):
        for l in range(5):
            for k in range(5):
                for beta in enumerate_maps(l, k):
                    found = [
                        (d, e)
                        for r in range(min(l, k) + 1)
                        for d in injections(r, k)
                        for e in surjections(l, r)
                        if compose(d, e) == beta
                    ]
                    assert found == [ez_factor(beta)]


class TestEnumeration:
    @pytest.mark.parametrize("l,k", [(l, k) for l in range(-1, 5) for k in range(-1, 5)])
    def test_matches_brute_force(self, l, k):
        got = [b.values for b in enumerate_maps(l, k)]
        want = monotone_values(l, k) if k >= 0 else ([()] if l == -1 else [])
        assert got == want
        if l >= 0 and k >= 0:
            assert len(got) == comb(k + l + 1, l + 1)

    def test_small_examples(self):
        assert len(enumerate_maps(1, 1)) == 3
        assert len(enumerate_maps(-1, 3)) == 1
        assert len(enumerate_maps(2, 0)) == 1

    def test_surjections_identity_first(self):
        for n in range(5):
            assert surjections(n, n) == (identity(n),)
            assert all(s.is_surjective for s in surjections(n + 2, n))
