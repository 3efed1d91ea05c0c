import math

import pytest

from skewdyck.asymptotics import (
    MissingCoefficient,
    coefficient_ratio,
    constants,
    convergence_report,
    dominant_singularity_numeric,
    estimate,
    log_estimate,
)
from skewdyck.holonomic import extend


@pytest.fixture(scope="module")
def coeffs():
    return extend([1, 1, 2, 6], 1600)


class TestConstants:
    def test_closed_forms(self):
        c = constants()
        s3 = math.sqrt(3.0)
        assert c.z0 == pytest.approx((2 / 11) * (3 * s3 - 4), abs=1e-15)
        assert c.z0 == pytest.approx(0.2174822586739, abs=1e-12)
        assert c.singular_value == pytest.approx(1 + s3 / 2, abs=1e-15)
        assert c.growth == pytest.approx(4.598076211353316, abs=1e-12)
        assert c.amplitude == pytest.approx(
            math.sqrt(2 + 8 * s3 / 9) / (2 * math.sqrt(math.pi)), abs=1e-15
        )

    def test_growth_times_z0_is_one(self):
        c = constants()
        assert abs(c.growth * c.z0 - 1.0) < 1e-14

    def test_numeric_rederivation(self):
        c = constants(recheck=False)
        assert abs(dominant_singularity_numeric() - c.z0) < 1e-12


class TestEstimate:
    def test_formula_at_n1(self):
        c = constants(recheck=False)
        assert estimate(1) == pytest.approx(c.amplitude * c.growth, rel=1e-12)

    def test_log_space_consistency(self):
        for n in (5, 50, 400):
            assert math.log(estimate(n)) == pytest.approx(log_estimate(n), abs=1e-9)

    def test_no_overflow_in_log_space(self):
        assert math.isfinite(log_estimate(100000))

    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            estimate(0)


class TestRatios:
    def test_ratio_at_100(self, coeffs):
        assert 0.9 <= coefficient_ratio(100, coeffs) <= 1.1

    def test_ratio_at_1000(self, coeffs):
        assert 0.99 <= coefficient_ratio(1000, coeffs) <= 1.01

    def test_deviation_strictly_shrinks(self, coeffs):
        devs = [
            abs(coefficient_ratio(n, coeffs) - 1.0)
            for n in (50, 100, 200, 400, 800, 1600)
        ]
        assert all(b < a for a, b in zip(devs, devs[1:]))

    def test_big_integer_log_is_accurate(self, coeffs):
        # cross-check math.log on a several-hundred-digit int via digit length
        s = coeffs[1600]
        approx = (len(str(s)) - 1) * math.log(10) + math.log(
            int(str(s)[:15]) / 10**14
        )
        assert math.log(s) == pytest.approx(approx, rel=1e-12)


class TestReport:
    def test_rows(self, coeffs):
        rows = convergence_report([50, 100], coeffs)
        assert [r[0] for r in rows] == [50, 100]
        assert rows[0][1] == coeffs[50]
        assert rows[0][2] == pytest.approx(estimate(50))
        assert rows[0][3] == pytest.approx(coefficient_ratio(50, coeffs))

    def test_overflowed_estimate_reported_as_none(self, coeffs):
        rows = convergence_report([800], coeffs)
        assert rows[0][2] is None
        assert math.isfinite(rows[0][3])

    def test_empty(self, coeffs):
        assert convergence_report([], coeffs) == []

    def test_missing_coefficient(self):
        with pytest.raises(MissingCoefficient):
            convergence_report([50], extend([1, 1, 2, 6], 10))
