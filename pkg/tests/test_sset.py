import threading
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import brute_hom_count
from declab.acceptance import corpus
from declab.ordinal import codegeneracy, coface, compose, enumerate_maps, identity
from declab.sset import (
    POINT,
    BiSimplex,
    Simplex,
    SSet,
    ValidationError,
    boundary,
    canonical_map,
    coequalizer,
    compose_maps,
    constant_map,
    disjoint_union,
    external_product,
    hom_bisset,
    hom_sset,
    horn,
    identity_map,
    inclusion,
    nondeg,
    parse_sset,
    pi0,
    pi0_map,
    print_sset,
    product,
    quotient,
    simplex,
    sphere,
    tensor,
    verify_split_fork,
)
from declab.kan import dec, dec_simplex

CORPUS = corpus()
NAMES = [e for e, _ in CORPUS]


class TestLevels:
    def test_interval(self):
        assert len(simplex(1).level(1)) == 3

    @pytest.mark.parametrize("n", range(5))
    def test_point(self, n):
        assert len(simplex(0).level(n)) == 1

    @pytest.mark.parametrize("n", range(5))
    def test_standard_simplex_counts(self, n):
        for k in range(4):
            assert len(simplex(k).level(n)) == len(enumerate_maps(n, k))

    def test_boundary_top(self):
        lv = boundary(2).level(2)
        assert len(lv) == 9
        assert not any(s.is_nondegenerate for s in lv)

    @pytest.mark.parametrize("n", range(5))
    def test_boundary_is_simplex_minus_surjections(self, n):
        # maps [n] -> [2] that are not onto
        want = sum(1 for b in enumerate_maps(n, 2) if not b.is_surjective)
        assert len(boundary(2).level(n)) == want


class TestAct:
    def test_identity(self):
        for _, X in CORPUS:
            for n in range(3):
                for s in X.level(n):
                    assert X.act(identity(n), s) == s

    def test_yoneda_face(self):
        D = simplex(2)
        assert D.act(coface(2, 0), D.top) == nondeg("[1,2]", 1)

    def test_degeneracy_of_cell(self):
        X = boundary(3)
        for n in range(3):
            for c in X.cells_of(n):
                for i in range(n + 1):
                    assert X.act(codegeneracy(n, i), X.cell(c)) == Simplex(c, codegeneracy(n, i))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            simplex(2).act(coface(1, 0), simplex(2).top)

    @pytest.mark.parametrize("name", NAMES)
    def test_contravariant(self, name):
        X = dict(CORPUS)[name]
        for a in range(4):
            for b in range(4):
                for c in range(4):
                    for beta in enumerate_maps(b, a):
                        for gamma in enumerate_maps(c, b):
                            for s in X.level(a):
                                assert X.act(compose(beta, gamma), s) == X.act(gamma, X.act(beta, s))

    @pytest.mark.parametrize("name", NAMES)
    def test_normal_form_idempotent(self, name):
        X = dict(CORPUS)[name]
        for n in range(4):
            for s in X.level(n):
                assert s.deg.is_surjective
                assert s.deg.cod == X.cell_dim[s.cell]
                assert X.act(identity(n), s) == s


class TestValidation:
    def test_bad_face_count(self):
        with pytest.raises(ValidationError):
            SSet({0: ["a"], 1: ["e"]}, {"e": [nondeg("a", 0)]})

    def test_unknown_face(self):
        with pytest.raises(ValidationError):
            SSet({0: ["a"], 1: ["e"]}, {"e": [nondeg("a", 0), nondeg("b", 0)]})

    def test_simplicial_identity(self):
        cells = {0: ["a", "b", "c"], 1: ["x", "y", "z"], 2: ["t"]}
        faces = {
            "x": [nondeg("b", 0), nondeg("a", 0)],
            "y": [nondeg("c", 0), nondeg("b", 0)],
            "z": [nondeg("c", 0), nondeg("a", 0)],
            "t": [nondeg("y", 1), nondeg("z", 1), nondeg("x", 1)],
        }
        SSet(cells, faces)
        faces["t"] = [nondeg("x", 1), nondeg("z", 1), nondeg("y", 1)]
        with pytest.raises(ValidationError):
            SSet(cells, faces)


class TestProducts:
    def test_unit(self):
        X = boundary(2)
        P = product(X, simplex(0))
        for n in range(4):
            assert len(P.level(n)) == len(X.level(n))
        assert {n: len(cs) for n, cs in P.cells.items()} == {n: len(cs) for n, cs in X.cells.items()}

    def test_square_has_two_shuffles(self):
        P = product(simplex(1), simplex(1))
        assert {n: len(cs) for n, cs in P.cells.items()} == {0: 4, 1: 5, 2: 2}

    @pytest.mark.parametrize("pair", [(simplex(1), simplex(1)), (boundary(2), simplex(1)), (horn(2, 1), sphere(1))])
    def test_levelwise_count(self, pair):
        X, Y = pair
        P = product(X, Y)
        for n in range(5):
            assert len(P.level(n)) == len(X.level(n)) * len(Y.level(n))

    def test_unpair_is_bijective(self):
        X, Y = boundary(2), simplex(1)
        P = product(X, Y)
        for n in range(4):
            pairs = {P.unpair(s) for s in P.level(n)}
            assert pairs == {(x, y) for x in X.level(n) for y in Y.level(n)}
            for x, y in pairs:
                assert P.unpair(P.pair(x, y)) == (x, y)

    def test_projections_are_maps(self):
        P = product(boundary(2), simplex(1))
        for p in P.projections():
            assert p.check()

    def test_shuffle_count(self):
        # nondegenerate top cells of Δ[p] × Δ[q] are the (p, q)-shuffles
        for p, q in [(1, 1), (1, 2), (2, 2)]:
            P = product(simplex(p), simplex(q))
            assert len(P.cells_of(p + q)) == len(list(combinations(range(p + q), p)))

    def test_associative_levelwise(self):
        A, B, C = simplex(1), sphere(1), boundary(2)
        left, right = product(product(A, B), C), product(A, product(B, C))
        for n in range(4):
            assert len(left.level(n)) == len(right.level(n))
            assert len(left.nondegenerate(n)) == len(right.nondegenerate(n))

    def test_tensor_counts(self):
        X = boundary(3)
        T = tensor(X, simplex(1))
        for k in range(5):
            assert len(T.level(k)) == (k + 2) * len(X.level(k))
        assert canonical_map(T).check()

    def test_tensor_unit(self):
        T = tensor(simplex(0), simplex(1))
        for k in range(4):
            assert len(T.level(k)) == len(simplex(1).level(k))


class TestQuotient:
    def test_circle(self):
        S = quotient(simplex(1), boundary(1))
        assert S.cells == {0: (POINT,), 1: ("[0,1]",)}
        assert S.face(0, S.cell("[0,1]")) == S.face(1, S.cell("[0,1]")) == nondeg(POINT, 0)

    def test_collapse_everything(self):
        Q = quotient(simplex(2), simplex(2))
        assert Q.cells == {0: (POINT,)}

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            quotient(simplex(1), [])

    def test_not_face_closed(self):
        with pytest.raises(ValidationError):
            quotient(simplex(2), ["[0,1]"])


class TestHom:
    def test_small_counts(self):
        assert len(hom_sset(simplex(1), simplex(1))) == 3
        assert len(hom_sset(boundary(1), simplex(1))) == 4

    @pytest.mark.parametrize("name", NAMES)
    def test_yoneda(self, name):
        X = dict(CORPUS)[name]
        for n in range(5):
            maps = hom_sset(simplex(n), X)
            assert len(maps) == len(X.level(n))
            assert {f(simplex(n).top) for f in maps} == set(X.level(n))

    @pytest.mark.parametrize(
        "A,X", [(boundary(2), simplex(1)), (horn(2, 1), boundary(2)), (sphere(1), product(simplex(1), simplex(1)))]
    )
    def test_against_brute_force(self, A, X):
        maps = hom_sset(A, X)
        assert len(maps) == brute_hom_count(A, X)
        assert all(f.check() for f in maps)
        assert len(set(maps)) == len(maps)

    def test_output_order_is_lexicographic(self):
        A, X = horn(2, 1), boundary(2)
        keys = [tuple(X.index(A.cell_dim[c])[f.assignment[c]] for c in A.all_cells()) for f in hom_sset(A, X)]
        assert keys == sorted(keys)

    def test_compose_and_identity(self):
        X = boundary(2)
        f = inclusion(X, simplex(2))
        assert compose_maps(f, identity_map(X)) == f
        assert f.check()


class TestPi0:
    @pytest.mark.parametrize("n", range(4))
    def test_simplex_connected(self, n):
        assert len(pi0(simplex(n))) == 1

    def test_discrete(self):
        assert len(pi0(boundary(1))) == 2
        assert len(pi0(disjoint_union(simplex(1), boundary(2)))) == 2

    def test_circle(self):
        assert len(pi0(sphere(1))) == 1

    def test_functorial(self):
        X = disjoint_union(simplex(1), simplex(0))
        assert pi0_map(identity_map(X)) == list(range(len(pi0(X))))
        f = constant_map(X, simplex(1), nondeg("[0]", 0))
        assert pi0_map(f) == [0, 0]

    @given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=15))
    def test_coequalizer_is_partition(self, pairs):
        q = coequalizer(list(range(10)), pairs)
        flat = sorted(x for cls in q.classes for x in cls)
        assert flat == list(range(10))
        for a, b in pairs:
            assert q.class_of(a) == q.class_of(b)
        for cls in q.classes:
            assert q.rep(cls[-1]) == min(cls)


class TestSplitFork:
    def test_examples(self):
        assert verify_split_fork(simplex(2), 2, 0)
        assert verify_split_fork(boundary(3), 2, 1)

    @pytest.mark.parametrize("name", NAMES)
    def test_corpus(self, name):
        X = dict(CORPUS)[name]
        for k in range(2, 6):
            for i in range(k):
                assert verify_split_fork(X, k, i)

    def test_corrupted_face_table(self):
        # swap the faces of one edge so that d_0 d_0 != d_0 d_1 on the 2-cell
        X = simplex(2)
        faces = {c: list(fs) for c, fs in X.faces.items()}
        faces["[0,1]"] = faces["[0,1]"][::-1]
        bad = SSet(X.cells, faces, validate=False)
        assert not all(verify_split_fork(bad, 2, i) for i in range(2))

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_split_fork(simplex(2), 1, 0)


class TestBisimplicial:
    def test_external_product_level(self):
        E = external_product(simplex(1), simplex(0))
        assert len(E.level2(1, 0)) == 3

    def test_dec_level(self):
        assert len(dec(simplex(1)).level2(0, 0)) == 3

    def test_identity_action(self):
        E = external_product(boundary(2), simplex(1))
        for k in range(3):
            for l in range(3):
                for b in E.level2(k, l):
                    assert E.act2(identity(k), identity(l), b) == b

    def test_terminal_hom(self):
        assert len(hom_bisset(dec_simplex(0), dec(simplex(0)))) == 1

    def test_bad_bicell_faces(self):
        from declab.sset import BiSSet

        with pytest.raises(ValidationError):
            BiSSet({(0, 0): ["a"], (1, 0): ["e"]}, {"e": [BiSimplex("a", identity(0), identity(0))]}, {})

    def test_external_product_levels(self):
        X, Z = boundary(2), simplex(1)
        E = external_product(X, Z)
        for k in range(3):
            for l in range(3):
                assert len(E.level2(k, l)) == len(X.level(k)) * len(Z.level(l))


class TestFileFormat:
    @pytest.mark.parametrize("name", NAMES)
    def test_round_trip(self, name):
        X = dict(CORPUS)[name]
        text = print_sset(X)
        Y = parse_sset(text)
        assert Y.structurally_equal(X)
        assert print_sset(Y) == text

    def test_header_required(self):
        from declab.sset import FormatError

        with pytest.raises(FormatError):
            parse_sset("cell a dim 0\n")

    def test_example_text(self):
        text = print_sset(sphere(1))
        assert text.splitlines()[0] == "SSET v1"
        assert "face 0 = (0) *" in text


class TestConcurrentMemo:
    def test_levels_agree_across_threads(self):
        X = product(boundary(2), simplex(1))
        results = []

        def work():
            results.append([tuple(X.level(n)) for n in range(4)])

        threads = [threading.Thread(target=work) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == results[0] for r in results)
        fresh = product(boundary(2), simplex(1))
        assert results[0] == [tuple(fresh.level(n)) for n in range(4)]
