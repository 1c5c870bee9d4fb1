import pytest
from sympy import primerange

from rtfinite.bases import (
    AdmissibleTriple,
    admissible_triples,
    color_set,
    is_admissible,
    lollipop_basis,
    lollipop_ratio_cumulative,
    lollipop_ratio_step,
    lollipop_ratio_two_step,
    theta_norm_ratio,
)
from rtfinite.context import LevelContext
from rtfinite.cyclotomic import EmbeddingIndex, Sign, embeddings
from rtfinite.errors import DivisionByZeroQuantumInteger, UsageError
from rtfinite.quantum import ONE, eval_sign, qint


class TestColorSet:
    def test_p6(self):
        assert color_set(LevelContext.at(6)) == [0, 1]

    def test_p5(self):
        assert color_set(LevelContext.at(5)) == [0, 2]

    def test_p10(self):
        assert color_set(LevelContext.at(10)) == [0, 1, 2, 3]


class TestLollipopBasis:
    def test_two_dimensional_boundary_case(self):
        # 2c = r - 3: exactly {u_0, u_1}
        basis = lollipop_basis(LevelContext.at(10), 1)
        assert [v.i for v in basis] == [0, 1]

    def test_count(self):
        assert len(lollipop_basis(LevelContext.at(14), 0)) == 6

    def test_out_of_range_color(self):
        with pytest.raises(UsageError):
            lollipop_basis(LevelContext.at(10), 2)

    @pytest.mark.parametrize("r", [5, 7, 11, 13])
    def test_dimension_formula(self, r):
        level = LevelContext.at(2 * r)
        for c in range((r - 2) // 2 + 1):
            assert len(lollipop_basis(level, c)) == max(0, r - 1 - 2 * c)

    @pytest.mark.parametrize("r", [5, 7, 11, 13])
    def test_vertex_triples_admissible(self, r):
        level = LevelContext.at(2 * r)
        for c in range((r - 2) // 2 + 1):
            for v in lollipop_basis(level, c):
                assert is_admissible(
                    level, v.loop_color, v.loop_color, v.stick_color
                ), (c, v.i)


class TestLollipopRatios:
    def test_one_step_display(self):
        level = LevelContext.at(14)
        ratio = lollipop_ratio_step(level, 2, 0)
        assert ratio.value == (qint(6) * qint(1)) / (qint(4) * qint(3))

    def test_one_step_closed_torus_is_unit(self):
        level = LevelContext.at(14)
        for i in range(5):
            assert lollipop_ratio_step(level, 0, i).value == ONE

    def test_one_step_sign(self):
        level = LevelContext.at(14)
        value = lollipop_ratio_step(level, 1, 0).value
        assert eval_sign(value, EmbeddingIndex(1, 14)) is Sign.POSITIVE

    def test_two_step_display(self):
        level = LevelContext.at(14)
        ratio = lollipop_ratio_two_step(level, 1, 0)
        expected = (qint(5) * qint(4) * qint(2) * qint(1)) / (
            qint(2) * qint(4) * qint(3) ** 2
        )
        assert ratio.value == expected

    def test_two_step_negative_at_clause_witness(self):
        # k = (2r+1)/3 = 5 for r = 7
        level = LevelContext.at(14)
        value = lollipop_ratio_two_step(level, 1, 0).value
        assert eval_sign(value, EmbeddingIndex(5, 14)) is Sign.NEGATIVE

    def test_index_out_of_range(self):
        level = LevelContext.at(14)
        with pytest.raises(UsageError):
            lollipop_ratio_step(level, 1, 3)
        with pytest.raises(UsageError):
            lollipop_ratio_two_step(level, 1, 2)

    @pytest.mark.parametrize("r", list(primerange(5, 98)))
    def test_two_step_equals_step_product(self, r):
        level = LevelContext.at(2 * r)
        for c in range((r - 2) // 2 + 1):
            for i in range(r - 3 - 2 * c):
                one = lollipop_ratio_step(level, c, i).value
                two = lollipop_ratio_step(level, c, i + 1).value
                assert lollipop_ratio_two_step(level, c, i).value == one * two

    @pytest.mark.parametrize("r", list(primerange(5, 98)))
    def test_no_vanishing_factor_anywhere(self, r):
        # every factor index is <= r - 1 < p, so no quantum integer in a
        # ratio vanishes at any embedding
        level = LevelContext.at(2 * r)
        embs = embeddings(level)
        for c in range((r - 2) // 2 + 1):
            for i in range(r - 2 - 2 * c):
                value = lollipop_ratio_step(level, c, i).value
                assert all(n < r for n, _ in value.factors)
                for emb in embs:
                    try:
                        assert eval_sign(value, emb) is not Sign.ZERO
                    except DivisionByZeroQuantumInteger:
                        pytest.fail(f"vanishing factor at r={r} c={c} i={i} k={emb.k}")

    def test_cumulative(self):
        level = LevelContext.at(14)
        product = (
            lollipop_ratio_step(level, 1, 0).value
            * lollipop_ratio_step(level, 1, 1).value
        )
        assert lollipop_ratio_cumulative(level, 1, 2).value == product


class TestAdmissibleTriples:
    def test_p6(self):
        triples = {t.as_tuple() for t in admissible_triples(LevelContext.at(6))}
        assert triples == {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
        assert (1, 1, 1) not in triples

    def test_p5(self):
        triples = {t.as_tuple() for t in admissible_triples(LevelContext.at(5))}
        assert {(0, 0, 0), (2, 2, 2), (2, 2, 0), (2, 0, 2), (0, 2, 2)} <= triples

    def test_p10(self):
        triples = {t.as_tuple() for t in admissible_triples(LevelContext.at(10))}
        assert (2, 1, 1) in triples
        assert (2, 2, 2) in triples
        assert (3, 3, 2) not in triples  # sum exceeds 2r - 4

    def test_lexicographic(self):
        triples = [t.as_tuple() for t in admissible_triples(LevelContext.at(10))]
        assert triples == sorted(triples)


class TestThetaNormRatio:
    def test_base_vector(self):
        level = LevelContext.at(10)
        assert theta_norm_ratio(level, AdmissibleTriple(0, 0, 0)).value == ONE

    def test_p5_222(self):
        # the printed value [4]/([2]^2 [3]^2), negative at k = 3
        level = LevelContext.at(5)
        value = theta_norm_ratio(level, AdmissibleTriple(2, 2, 2)).value
        assert value == qint(4) / (qint(2) ** 2 * qint(3) ** 2)
        assert eval_sign(value, EmbeddingIndex(3, 5)) is Sign.NEGATIVE

    def test_p10_211(self):
        # carries the sign of <2> = [3] at every embedding; negative at k = 3
        level = LevelContext.at(10)
        value = theta_norm_ratio(level, AdmissibleTriple(2, 1, 1)).value
        for emb in embeddings(level):
            assert eval_sign(value, emb) is eval_sign(qint(3), emb)
        assert eval_sign(value, EmbeddingIndex(3, 10)) is Sign.NEGATIVE

    def test_inadmissible(self):
        with pytest.raises(UsageError):
            theta_norm_ratio(LevelContext.at(6), AdmissibleTriple(1, 1, 1))

    @pytest.mark.parametrize("p", [6, 10, 14, 22])
    def test_diagonal_pairs_positive_at_k1(self, p):
        # (a, a, 0) colorings reduce to the unit ratio at even levels
        level = LevelContext.at(p)
        emb = EmbeddingIndex(1, p)
        for a in level.colors:
            if not is_admissible(level, a, a, 0):
                continue
            value = theta_norm_ratio(level, AdmissibleTriple(a, a, 0)).value
            assert value == ONE
            assert eval_sign(value, emb) is Sign.POSITIVE
