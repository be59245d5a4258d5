"""P-sum sets, the gap translation property, and the two-Cantor demo."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

import oracles
from spectrekit import (
    BudgetExceededError,
    DomainError,
    achievement_set,
    cantor_pair_demo,
    gap_translation_check,
    pspec,
    psum_set,
    series_spec,
)
from gen import rand_pspec
from spectrekit.psums import demo_level_set


def scalars(A) -> list:
    return [p[0] for p in A.elements]


class TestPSpec:
    def test_normalizes_and_sorts(self):
        spec = pspec(["1", "0", "1"], ["1/2", "1/4"])
        assert spec.coeffs == (0, 1)
        assert spec.terms == (Fraction(1, 2), Fraction(1, 4))

    def test_requires_zero_coefficient(self):
        with pytest.raises(DomainError):
            pspec(["1", "2"], ["1/2"])

    def test_rejects_negative_coefficients(self):
        with pytest.raises(DomainError):
            pspec(["0", "-1"], ["1/2"])


class TestPsumSet:
    def test_binary_coefficients_give_subset_sums(self):
        spec = pspec(["0", "1"], ["1/2", "1/4"])
        assert scalars(psum_set(spec)) == \
            [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]

    def test_ternary_example(self):
        spec = pspec(["0", "1", "2"], ["1/4", "1/16"])
        want = [0, Fraction(1, 16), Fraction(1, 8), Fraction(1, 4),
                Fraction(5, 16), Fraction(3, 8), Fraction(1, 2),
                Fraction(9, 16), Fraction(5, 8)]
        assert scalars(psum_set(spec)) == want

    def test_zero_only_coefficients(self):
        assert scalars(psum_set(pspec(["0"], ["1/2", "7"]))) == [0]

    def test_matches_naive_product_scan(self):
        r = random.Random(601)
        for _ in range(60):
            spec = rand_pspec(r)
            assert scalars(psum_set(spec)) == \
                oracles.naive_psum(spec.coeffs, spec.terms)

    def test_binary_coefficients_match_achievement_set(self):
        r = random.Random(602)
        for _ in range(40):
            terms = [Fraction(r.randint(0, 8), r.randint(1, 8))
                     for _ in range(r.randint(1, 8))]
            spec = pspec(["0", "1"], terms)
            assert psum_set(spec) == achievement_set(series_spec(terms))

    def test_budget_guard(self):
        spec = pspec(["0", "1", "2"], ["1"] * 10)
        with pytest.raises(BudgetExceededError):
            psum_set(spec, budget=100)


class TestGapTranslation:
    def test_quarter_grid_gap(self):
        T = psum_set(pspec(["0", "1"], ["1/2", "1/4"]))
        result = gap_translation_check(T, (Fraction(1, 4), Fraction(1, 2)))
        assert result.ok
        assert result.epsilon == Fraction(1, 4)

    def test_two_point_set_has_a_small_witness(self):
        T = psum_set(pspec(["0", "1"], ["1"]))
        result = gap_translation_check(T, (0, 1))
        assert result.ok
        assert result.epsilon == Fraction(1, 2)
        assert oracles.translation_predicate([p for p in scalars(T)],
                                             Fraction(1), result.epsilon)

    def test_eighth_grid_every_gap(self):
        T = psum_set(pspec(["0", "1"], ["1/2", "1/4", "1/8"]))
        for k in range(7):
            gap = (Fraction(k, 8), Fraction(k + 1, 8))
            assert gap_translation_check(T, gap).ok

    def test_witness_satisfies_the_predicate(self):
        r = random.Random(603)
        for _ in range(40):
            spec = rand_pspec(r, max_terms=4)
            T = psum_set(spec)
            values = scalars(T)
            for alpha, beta, _ in oracles.naive_gaps(values):
                result = gap_translation_check(T, (alpha, beta))
                assert result.ok
                assert oracles.translation_predicate(values, beta, result.epsilon)

    def test_rejects_intervals_that_are_not_gaps(self):
        T = psum_set(pspec(["0", "1"], ["1/2", "1/4"]))
        with pytest.raises(DomainError):
            gap_translation_check(T, (Fraction(1, 8), Fraction(1, 4)))
        with pytest.raises(DomainError):
            gap_translation_check(T, (Fraction(1, 2), Fraction(1, 4)))

    def test_requires_zero_minimum(self):
        T = psum_set(pspec(["0", "1"], ["1/2"]))
        shifted = type(T)(T.ctx, tuple((p[0] + 1,) for p in T.elements))
        with pytest.raises(DomainError):
            gap_translation_check(shifted, (Fraction(3, 2), 2))

    def test_verdict_matches_dense_sampling(self):
        r = random.Random(604)
        checked = 0
        while checked < 20:
            spec = rand_pspec(r, max_terms=4)
            T = psum_set(spec)
            values = scalars(T)
            gaps = oracles.naive_gaps(values)
            if not gaps:
                continue
            checked += 1
            alpha, beta, _ = r.choice(gaps)
            result = gap_translation_check(T, (alpha, beta))
            assert result.ok == oracles.dense_translation_exists(values, beta)


class TestCantorPairDemo:
    def test_level_sets_are_plausible_cantor_stages(self):
        for m in range(4):
            A = demo_level_set(m)
            values = scalars(A)
            assert values[0] == 0
            assert Fraction(1, 4) in values
            assert Fraction(1, 2) in values
            assert all(0 <= v <= Fraction(3, 4) for v in values)
            assert all(not (Fraction(1, 4) < v < Fraction(1, 2)) for v in values)

    def test_reported_radii_shrink_strictly(self):
        report = cantor_pair_demo(6)
        assert report.strictly_decreasing
        radii = [eps for _, eps in report.rows]
        assert radii == sorted(radii, reverse=True)
        assert len(set(radii)) == len(radii)

    def test_frozen_radii(self):
        report = cantor_pair_demo(6)
        assert [eps for _, eps in report.rows] == [
            Fraction(1, 4), Fraction(1, 32), Fraction(1, 128),
            Fraction(1, 512), Fraction(1, 2048), Fraction(1, 8192),
            Fraction(1, 32768)]

    def test_each_radius_is_a_genuine_witness(self):
        report = cantor_pair_demo(4)
        for level, eps in report.rows:
            values = scalars(demo_level_set(level))
            assert oracles.translation_predicate(values, Fraction(1, 2), eps)

    def test_level_bounds(self):
        with pytest.raises(DomainError):
            cantor_pair_demo(0)
        with pytest.raises(DomainError):
            cantor_pair_demo(9)

    def test_note_explains_the_finite_scope(self):
        assert "finite" in cantor_pair_demo(2).note
