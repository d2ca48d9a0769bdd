import pytest

from declab.acceptance import corpus
from declab.kan import (
    Cotensor,
    LevelMap,
    Total,
    adjunction_check,
    cellize,
    check_pi0_identification,
    comparison,
    counit_iso,
    counit_sigma,
    dec,
    dec_simplex,
    iota2_shriek,
    iota_shriek,
    path_index_map,
    path_space,
    sigma_a_shriek,
    sigma_shriek,
    sigma_shriek_composite,
    total,
    two_route_agreement,
    unit,
    verify_comparison,
    verify_counit,
)
from declab.ordinal import coface, compose, enumerate_maps, identity, ordinal_sum_map
from declab.sset import boundary, external_product, hom_sset, horn, product, simplex, sphere

CORPUS = corpus()
NAMES = [e for e, _ in CORPUS]


class TestDec:
    def test_point(self):
        D = dec(simplex(0))
        assert all(len(D.level2(k, l)) == 1 for k in range(3) for l in range(3))

    @pytest.mark.parametrize("name", NAMES)
    def test_levels_are_shifted(self, name):
        X = dict(CORPUS)[name]
        D = dec(X)
        for k in range(3):
            for l in range(3):
                assert D.level2(k, l) == X.level(k + 1 + l)

    def test_horizontal_face(self):
        X = boundary(3)
        D = dec(X)
        for y in D.level2(1, 0):
            assert D.hface(0, y, 1, 0) == X.act(ordinal_sum_map(coface(1, 0), identity(0)), y)

    def test_bisimplicial_identities(self):
        D = dec(horn(2, 1))
        for k in range(1, 3):
            for l in range(1, 3):
                for y in D.level2(k, l):
                    for i in range(k + 1):
                        for j in range(l + 1):
                            assert D.hface(i, D.vface(j, y, k, l), k, l - 1) == D.vface(j, D.hface(i, y, k, l), k - 1, l)

    def test_dec_simplex_cells(self):
        # bicells are monotone maps injective on each block
        for n in range(4):
            D = dec_simplex(n)
            for b in D.all_cells():
                u, v = b
                assert list(u) == sorted(set(u)) and list(v) == sorted(set(v)) and u[-1] <= v[0]


class TestIotaShriek:
    def test_carriers(self):
        assert len(iota_shriek(simplex(2)).carrier) == 1
        assert len(iota_shriek(boundary(1)).carrier) == 2

    def test_augmentation_coequalizes(self):
        A = iota_shriek(simplex(1))
        assert A.check()
        e = simplex(1).top
        assert A.augmentation[simplex(1).face(0, e)] == A.augmentation[simplex(1).face(1, e)]

    def test_iota2_point(self):
        A = iota2_shriek(dec(simplex(0)))
        assert len(A.level(-1, -1)) == 1
        assert all(len(A.level(i, -1)) == 1 and len(A.level(-1, i)) == 1 for i in range(3))
        assert A.check(3)

    def test_iota2_discrete_columns(self):
        A = iota2_shriek(external_product(boundary(1), simplex(0)))
        assert all(len(A.level(-1, q)) == 2 for q in range(3))
        assert A.check(3)

    @pytest.mark.parametrize("n", range(4))
    def test_corner_of_dec_simplex(self, n):
        assert len(iota2_shriek(dec_simplex(n)).level(-1, -1)) == 1


class TestSigmaShriek:
    def test_point_levels(self):
        A = iota2_shriek(dec(simplex(0)))
        S = sigma_a_shriek(A)
        for k in range(5):
            assert len(S.level(k)) == k + 2

    def test_identity_routing(self):
        S = sigma_shriek(dec(boundary(2)))
        for k in range(4):
            for x in S.level(k):
                assert S.act(identity(k), x) == x

    def test_coface_zero_lands_in_components(self):
        S = sigma_a_shriek(iota2_shriek(dec(simplex(1))))
        for k in range(1, 4):
            for x in S.level(k):
                if x[0] == 0:
                    assert S.act(coface(k, 0), x)[0] == -1

    def test_point_is_interval(self):
        S = sigma_shriek(dec(simplex(0)))
        for k in range(5):
            assert len(S.level(k)) == len(simplex(1).level(k))

    def test_level_zero_formula(self):
        from declab.kan import column_components, row_components

        for Y in (dec(boundary(2)), external_product(boundary(2), simplex(1))):
            S = sigma_shriek(Y)
            assert len(S.level(0)) == len(column_components(Y, 0)) + len(row_components(Y, 0))

    def test_functorial(self):
        S = sigma_shriek(external_product(simplex(1), boundary(1)))
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    for beta in enumerate_maps(b, a):
                        for gamma in enumerate_maps(c, b):
                            for x in S.level(a):
                                assert S.act(compose(beta, gamma), x) == S.act(gamma, S.act(beta, x))

    @pytest.mark.parametrize(
        "Y",
        [dec(simplex(0)), external_product(boundary(2), simplex(1)), dec(boundary(3)), external_product(simplex(1), simplex(1))],
        ids=["decpoint", "d2xd1", "decb3", "d1xd1"],
    )
    def test_two_routes(self, Y):
        assert two_route_agreement(Y, 4)
        assert sigma_shriek_composite(Y).augmented().check()

    def test_dec_interval_is_square(self):
        iso, P = counit_iso(simplex(1), 4)
        assert iso.verify()
        Q = product(simplex(1), simplex(1))
        for k in range(5):
            assert len(sigma_shriek(dec(simplex(1))).level(k)) == len(Q.level(k))


class TestCounit:
    def test_path_index(self):
        for k in range(4):
            assert path_index_map(k, -1).values == (1,) * (k + 1)
            assert path_index_map(k, k).values == (0,) * (k + 1)
            for i in range(-1, k + 1):
                assert path_index_map(k, i).values == tuple(0 if r <= i else 1 for r in range(k + 1))

    @pytest.mark.parametrize("name", NAMES)
    def test_counit(self, name):
        assert verify_counit(dict(CORPUS)[name], 4)

    @pytest.mark.parametrize("name", NAMES)
    def test_level_counts(self, name):
        # each k-simplex of X yields k+2 elements, one per cut position
        X = dict(CORPUS)[name]
        S = sigma_shriek(dec(X))
        for k in range(4):
            assert len(S.level(k)) == (k + 2) * len(X.level(k))

    def test_folding_interval(self):
        c = counit_sigma(simplex(1), 3)
        assert set(c.table(0).values()) == set(simplex(1).level(0))
        assert len(c.table(0)) == 2 * len(simplex(1).level(0))
        assert c.check_natural()

    def test_point(self):
        iso, P = counit_iso(simplex(0), 3)
        assert iso.verify()
        assert all(len(P.level(k)) == k + 2 for k in range(4))


class TestPi0Identification:
    @pytest.mark.parametrize("name", NAMES)
    def test_corpus(self, name):
        X = dict(CORPUS)[name]
        for k in range(5):
            assert check_pi0_identification(X, k, 4)

    def test_simplex_edges(self):
        from declab.kan import column_components

        assert len(column_components(dec(simplex(2)), 1)) == 6
        assert check_pi0_identification(simplex(2), 1)


class TestTotal:
    def test_point(self):
        for n in range(4):
            assert len(total(dec(simplex(0)), n)) == 1

    def test_interval_counts(self):
        assert len(total(dec(simplex(1)), 0)) == 3 == len(hom_sset(simplex(1), simplex(1)))
        assert len(total(dec(simplex(1)), 1)) == len(hom_sset(product(simplex(1), simplex(1)), simplex(1)))

    def test_simplicial(self):
        T = Total(dec(boundary(2)))
        same = LevelMap(T, T, lambda x: x, 2, "identity")
        assert same.check_natural()

    def test_unit_interval(self):
        X = simplex(1)
        T = Total(dec(X))
        images = [unit(X, 0)(x) for x in X.level(0)]
        assert len(set(images)) == 2
        assert all(u in T.index(0) for u in images)

    def test_unit_natural(self):
        X = boundary(2)
        T = Total(dec(X))
        for a in range(4):
            for b in range(4):
                for beta in enumerate_maps(b, a):
                    for x in X.level(a):
                        assert unit(X, b)(X.act(beta, x)) == T.act(beta, unit(X, a)(x))


class TestComparison:
    def test_point(self):
        assert verify_comparison(simplex(0), 3)

    def test_interval_constant_paths(self):
        X = simplex(1)
        T, C = Total(dec(X)), path_space(X)
        comp = comparison(X, T, C)
        images = {comp(p) for p in T.level(0)}
        assert images == set(C.level(0)) and len(images) == 3
        consts = {comp(unit(X, 0)(x)) for x in X.level(0)}
        assert len(consts) == 2

    @pytest.mark.parametrize("name", NAMES)
    def test_corpus(self, name):
        assert verify_comparison(dict(CORPUS)[name], 3)

    def test_cotensor_levels(self):
        C = Cotensor(boundary(2), simplex(1))
        for n in range(3):
            assert len(C.level(n)) == len(hom_sset(product(simplex(n), simplex(1)), boundary(2)))


class TestAdjunction:
    def test_point_source(self):
        assert adjunction_check(dec_simplex(0), simplex(1)).stats["maps"] == 3

    def test_bipoint(self):
        # σ_! of the point is Δ[1], so both sides are X_1
        Y = external_product(simplex(0), simplex(0))
        for X in (simplex(1), boundary(2), sphere(1)):
            res = adjunction_check(Y, X)
            assert res and res.stats["maps"] == len(X.level(1))

    def test_terminal_target(self):
        assert adjunction_check(dec_simplex(2), simplex(0)).stats["maps"] == 1

    def test_cellize_round_trip(self):
        S = sigma_shriek(dec_simplex(1))
        cells = cellize(S, 2)
        for n in range(4):
            assert len(cells.level(n)) == len(S.level(n))
