import math
import random
from fractions import Fraction

import pytest

from alphaspec import (
    FamilySpec,
    NumericError,
    ParameterError,
    ScenarioParams,
    alpha_zero_discriminant,
    charpoly_gap,
    extremal_family,
    family_charpoly,
    family_radius,
    gap_at_half_radius,
    half_charpoly,
    half_family,
    half_radius_closed,
    half_radius_margin,
    half_radius_radical,
    half_radius_radicand,
    scenario_violations,
    spectral_radius,
)

from oracles import dense_rho, valid_family_specs

SQRT33 = math.sqrt(33)
ALPHAS = (0.0, 0.1, 0.3, 0.5)


class TestScenarioParams:
    def test_accepts_valid(self):
        p = ScenarioParams(8, 1, 2, 0.0)
        assert p.matching_bound == 3
        assert not p.at_endpoint
        assert ScenarioParams(8, 3, 2, 0.5).at_endpoint

    def test_violation_messages(self):
        msgs = scenario_violations(7, 1, 2, 0.0)
        assert any("even" in m for m in msgs)
        msgs = scenario_violations(8, 5, 2, 0.0)
        assert any("t" in m for m in msgs)
        assert scenario_violations(8, 1, 2, 1.5)
        assert scenario_violations(8, 1, 1, 0.0)
        assert scenario_violations(4, 1, 4, 0.0)
        assert scenario_violations(8, 0, 2, 0.0)

    def test_rejects_invalid(self):
        with pytest.raises(ParameterError):
            ScenarioParams(7, 1, 2, 0.0)
        with pytest.raises(ParameterError):
            ScenarioParams(8, 4, 2, 0.0)

    def test_rejects_non_integers(self):
        assert scenario_violations(8.0, 1, 2, 0.0)
        assert scenario_violations(8, 1.5, 2, 0.0)


class TestCharpolys:
    def test_cubic_frozen_at_8_1_2(self):
        for x in (-2.0, 0.0, 1.0, 3.0, 5.5):
            expected = x ** 3 - 4 * x ** 2 - 7 * x + 8
            assert family_charpoly(x, 8, 1, 2, 0.0) == pytest.approx(
                expected, abs=1e-12)

    def test_cubic_frozen_at_6_1_2(self):
        for x in (-1.0, 0.0, 2.0, 4.0):
            expected = x ** 3 - 2 * x ** 2 - 5 * x + 4
            assert family_charpoly(x, 6, 1, 2, 0.0) == pytest.approx(
                expected, abs=1e-12)

    def test_quadratic_frozen(self):
        for x in (-3.0, 0.0, 5.0, 7.0):
            assert half_charpoly(x, 8, 2, 0.0) == pytest.approx(
                x ** 2 - 2 * x - 15, abs=1e-12)
            assert half_charpoly(x, 6, 2, 0.0) == pytest.approx(
                x ** 2 - x - 8, abs=1e-12)

    def test_radius_is_cubic_root(self):
        for n, s, k in [(8, 1, 2), (10, 2, 2), (12, 2, 4)]:
            for a in ALPHAS:
                rho = family_radius(n, s, k, a)
                assert abs(family_charpoly(rho, n, s, k, a)) < 1e-7

    def test_half_radius_is_quadratic_root(self):
        for n, k in [(6, 2), (8, 2), (12, 4)]:
            for a in ALPHAS:
                rho = half_radius_closed(n, k, a)
                assert abs(half_charpoly(rho, n, k, a)) < 1e-9


class TestHalfRadius:
    def test_frozen_values(self):
        assert half_radius_closed(8, 2, 0.0) == pytest.approx(5.0, abs=1e-12)
        assert half_radius_closed(6, 2, 0.0) == pytest.approx(
            (1 + SQRT33) / 2, abs=1e-12)
        assert half_radius_closed(8, 2, 0.5) == pytest.approx(
            3 + math.sqrt(6), abs=1e-12)
        assert half_radius_closed(10, 2, 0.5) == pytest.approx(
            4 + math.sqrt(10), abs=1e-12)
        assert half_radius_closed(7, 3, 0.0) == pytest.approx(
            (1 + math.sqrt(41)) / 2, abs=1e-12)

    def test_radicand_frozen(self):
        assert half_radius_radicand(6, 2, 0.0) == pytest.approx(132.0)
        assert half_radius_radicand(8, 2, 0.0) == pytest.approx(256.0)
        assert half_radius_radical(8, 2, 0.0) == pytest.approx(16.0)

    def test_matches_dense(self):
        for n, k in [(6, 2), (8, 2), (10, 4), (13, 3), (16, 2)]:
            g = half_family(n, k)
            for a in ALPHAS:
                assert abs(half_radius_closed(n, k, a)
                           - dense_rho(g, a)) < 1e-8

    def test_equals_family_radius_at_endpoint(self):
        for n, k in [(6, 2), (8, 2), (10, 4)]:
            s = (n - k) // 2
            for a in ALPHAS:
                assert abs(half_radius_closed(n, k, a)
                           - family_radius(n, s, k, a)) < 1e-9


class TestFamilyRadius:
    def test_frozen_values(self):
        assert family_radius(8, 1, 2, 0.0) == pytest.approx(
            5.069517991915756, abs=1e-9)
        assert family_radius(6, 1, 2, 0.0) == pytest.approx(
            3.1774096808992844, abs=1e-9)
        assert family_radius(8, 1, 2, 0.5) == pytest.approx(
            5.256801252189466, abs=1e-9)
        assert family_radius(7, 1, 3, 0.0) == pytest.approx(
            3.2730728630676666, abs=1e-9)
        assert family_radius(7, 2, 3, 0.25) == pytest.approx(
            3.9029685520195856, abs=1e-9)

    def test_matches_dense_grid(self):
        for n, s, k in valid_family_specs(12):
            g = extremal_family(FamilySpec(n, s, k))
            for a in ALPHAS:
                assert abs(family_radius(n, s, k, a)
                           - dense_rho(g, a)) < 1e-8, (n, s, k, a)

    def test_matches_package_eigensolver(self):
        g = extremal_family(FamilySpec(11, 2, 3))
        assert abs(family_radius(11, 2, 3, 0.3)
                   - spectral_radius(g, 0.3)) < 1e-8

    def test_validation(self):
        with pytest.raises(ParameterError):
            family_radius(8, 0, 2, 0.0)
        with pytest.raises(ParameterError):
            family_radius(8, 4, 2, 0.0)
        with pytest.raises(ParameterError):
            family_radius(7, 1, 2, 0.0)
        with pytest.raises(ParameterError):
            family_radius(8, 1, 2, 1.25)


class TestGap:
    def test_frozen_value(self):
        assert charpoly_gap(5.0, 8, 1, 2, 0.0) == pytest.approx(-4.0,
                                                                abs=1e-12)

    def test_factorization_identity(self):
        # cubic - (x - (n-k-2(1-a)s)/2) * quadratic == (n-2s-k)/8 * gap
        rng = random.Random(20)
        for _ in range(80):
            n, s, k = rng.choice(valid_family_specs(16))
            a = rng.choice(ALPHAS)
            x = rng.uniform(-3, n)
            lhs = family_charpoly(x, n, s, k, a) \
                - (x - (n - k - 2 * (1 - a) * s) / 2) * half_charpoly(x, n, k, a)
            rhs = (n - 2 * s - k) / 8 * charpoly_gap(x, n, s, k, a)
            assert lhs == pytest.approx(rhs, abs=1e-7 * max(1, n ** 3))


class TestGapAtHalfRadius:
    def test_frozen_values(self):
        assert gap_at_half_radius(8, 1, 2, 0.0) == pytest.approx(-4.0,
                                                                 abs=1e-10)
        assert gap_at_half_radius(6, 1, 2, 0.0) == pytest.approx(
            4 * SQRT33 - 12, abs=1e-10)
        assert gap_at_half_radius(8, 1, 2, 0.5) == pytest.approx(5.0,
                                                                 abs=1e-10)

    def test_is_gap_evaluated_at_half_radius(self):
        rng = random.Random(21)
        for _ in range(60):
            n, t, k = rng.choice(valid_family_specs(16))
            a = rng.choice(ALPHAS)
            direct = charpoly_gap(half_radius_closed(n, k, a), n, t, k, a)
            assert gap_at_half_radius(n, t, k, a) == pytest.approx(
                direct, abs=1e-8 * max(1, n ** 2))


class TestMargin:
    def test_frozen_values(self):
        assert half_radius_margin(8, 1, 2, 0.5) == pytest.approx(15.0)
        assert half_radius_margin(6, 1, 2, 0.0) == pytest.approx(24.0)
        assert half_radius_margin(4, 1, 2, 0.0) == pytest.approx(12.0)
        assert half_radius_margin(8, 1, 2, 0.0) == pytest.approx(28.0)

    def test_radicand_offset_identity(self):
        # radicand - (4(n-(2-a)t-k) - (n-k-2+2an))^2 == 4 * margin
        rng = random.Random(22)
        for _ in range(60):
            n, t, k = rng.choice(valid_family_specs(16))
            a = rng.choice(ALPHAS)
            offset = 4 * (n - (2 - a) * t - k) - (n - k - 2 + 2 * a * n)
            lhs = half_radius_radicand(n, k, a) - offset ** 2
            assert lhs == pytest.approx(4 * half_radius_margin(n, t, k, a),
                                        abs=1e-7 * max(1, n ** 2))


class TestAlphaZeroDiscriminant:
    def test_frozen_values(self):
        assert alpha_zero_discriminant(8, 1, 2) == 272
        assert alpha_zero_discriminant(6, 1, 2) == -384
        assert alpha_zero_discriminant(4, 1, 2) == -176

    def test_returns_exact_int(self):
        v = alpha_zero_discriminant(30, 13, 2)
        assert isinstance(v, int)
        assert v == 18816

    def test_sign_tracks_gap_when_cofactor_positive(self):
        # where the conjugate cofactor is positive, sign(disc) = sign(gap)
        for n, t, k in valid_family_specs(14):
            a_co = (n * n - k * k) \
                - (k + t - 1) * (n + 8 * t - k - 2)
            if a_co <= 0:
                continue
            disc = alpha_zero_discriminant(n, t, k)
            gap = gap_at_half_radius(n, t, k, 0.0)
            if disc > 0:
                assert gap < 1e-9
            elif disc < 0:
                assert gap > -1e-9
