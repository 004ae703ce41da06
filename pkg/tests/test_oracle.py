"""Numerical oracles: quadrature, Monte-Carlo estimator, log-integral."""

import math

import numpy as np
import pytest

from expsum.dist import Erlang2, Exponential, HypoexpTwo
from expsum.entropy import erlang2_entropy
from expsum.oracle import (
    ConvergenceError,
    EstimateWithError,
    QuadratureConfig,
    entropy_monte_carlo,
    entropy_quadrature,
    gr_log_integral,
    normalization_quadrature,
)
from expsum.specfun import EULER_GAMMA


class TestQuadratureConfig:
    def test_defaults(self):
        cfg = QuadratureConfig()
        assert cfg.abs_tol == 1e-10
        assert cfg.max_subdivisions == 2000

    @pytest.mark.parametrize("tol", [0.0, -1e-8, math.nan])
    def test_rejects_bad_tolerance(self, tol):
        with pytest.raises(ValueError):
            QuadratureConfig(abs_tol=tol)

    def test_rejects_bad_budget(self):
        with pytest.raises(ValueError):
            QuadratureConfig(max_subdivisions=0)


class TestEntropyQuadrature:
    def test_exponential_unit_rate(self):
        assert abs(entropy_quadrature(Exponential(1.0)) - 1.0) < 1e-10

    def test_exponential_rate_two(self):
        expected = 1.0 - math.log(2.0)
        assert abs(entropy_quadrature(Exponential(2.0)) - expected) < 1e-10

    def test_erlang2_unit_rate(self):
        assert abs(entropy_quadrature(Erlang2(1.0)) - (1.0 + EULER_GAMMA)) < 1e-9

    def test_erlang2_rate_two(self):
        expected = 1.0 + EULER_GAMMA - math.log(2.0)
        assert abs(entropy_quadrature(Erlang2(2.0)) - expected) < 1e-9

    def test_hypoexp_two_one(self):
        d = HypoexpTwo.from_rates(2.0, 1.0)
        assert abs(entropy_quadrature(d) - (2.0 - math.log(2.0))) < 1e-9

    def test_degenerate_routes_to_erlang_forms(self):
        d = HypoexpTwo.from_rates(1.0 + 5e-14, 1.0)
        assert d.is_degenerate
        assert abs(entropy_quadrature(d) - erlang2_entropy(1.0)) < 1e-9

    def test_loose_tolerance_still_close(self):
        cfg = QuadratureConfig(abs_tol=1e-6)
        d = HypoexpTwo.from_rates(2.0, 1.0)
        assert abs(entropy_quadrature(d, cfg) - (2.0 - math.log(2.0))) < 1e-5

    def test_budget_exhaustion_raises(self):
        cfg = QuadratureConfig(abs_tol=1e-12, max_subdivisions=3)
        with pytest.raises(ConvergenceError):
            entropy_quadrature(HypoexpTwo.from_rates(2.0, 1.0), cfg)

    def test_rejects_unsupported_distribution(self):
        with pytest.raises(TypeError):
            entropy_quadrature(object())


class TestNormalization:
    def test_unit_mass_across_grid(self):
        # includes the diagonal, exercising the degenerate Erlang branch
        grid = [float(g) for g in np.geomspace(0.1, 10.0, 7)]
        worst = 0.0
        for i, a in enumerate(grid):
            for b in grid[i:]:
                d = HypoexpTwo.from_rates(a, b)
                worst = max(worst, abs(normalization_quadrature(d) - 1.0))
        assert worst <= 1e-10

    def test_single_rate_families(self):
        assert abs(normalization_quadrature(Exponential(0.5)) - 1.0) < 1e-10
        assert abs(normalization_quadrature(Erlang2(3.0)) - 1.0) < 1e-10


class TestMonteCarlo:
    def test_requires_two_samples(self):
        d = HypoexpTwo.from_rates(2.0, 1.0)
        with pytest.raises(ValueError):
            entropy_monte_carlo(d, 1, seed=42)
        with pytest.raises(ValueError):
            entropy_monte_carlo(d, 0, seed=42)

    def test_deterministic_given_seed(self):
        d = HypoexpTwo.from_rates(2.0, 1.0)
        a = entropy_monte_carlo(d, 10_000, seed=42)
        b = entropy_monte_carlo(d, 10_000, seed=42)
        assert a == b
        assert isinstance(a, EstimateWithError)

    def test_within_statistical_band(self):
        d = HypoexpTwo.from_rates(2.0, 1.0)
        est = entropy_monte_carlo(d, 10**5, seed=42)
        closed = 2.0 - math.log(2.0)
        assert est.std_error > 0.0
        assert abs(est.estimate - closed) <= 5.0 * est.std_error
        assert est.n_samples == 10**5


class TestGrLogIntegral:
    def test_unit_arguments(self):
        # int_0^1 ln(1 - xi) d(xi) = -1
        assert abs(gr_log_integral(1.0, 1.0) + 1.0) < 1e-10

    def test_u_two_v_one(self):
        # -(gamma + psi(3))/2 with psi(3) = 3/2 - gamma
        assert abs(gr_log_integral(2.0, 1.0) + 0.75) < 1e-9

    def test_u_one_v_two(self):
        # -(gamma + psi(3/2)) = 2 ln 2 - 2
        expected = 2.0 * math.log(2.0) - 2.0
        assert abs(gr_log_integral(1.0, 2.0) - expected) < 1e-9

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_domain(self, bad):
        with pytest.raises(ValueError):
            gr_log_integral(bad, 1.0)
        with pytest.raises(ValueError):
            gr_log_integral(1.0, bad)
