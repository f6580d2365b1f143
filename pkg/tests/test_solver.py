import math

import pytest

from nevderiv.core.errors import DerivativeVanished, InvalidConfig, InvalidDegree, OutOfDomain
from nevderiv.models import ExtremumKind, SolverSettings
from nevderiv.services.solver import find_extremum, newton_root
from nevderiv.services.table import interpolate_at, load_table, sample_function


def bisect(f, lo, hi, width=1e-13):
    f_lo = f(lo)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def golden_section_max(f, lo, hi, width=1e-9):
    ratio = (math.sqrt(5) - 1) / 2
    while hi - lo > width:
        left = hi - ratio * (hi - lo)
        right = lo + ratio * (hi - lo)
        if f(left) < f(right):
            lo = left
        else:
            hi = right
    return 0.5 * (lo + hi)


class TestNewtonRoot:
    def test_sine_root_near_pi(self, sin_table):
        result = newton_root(sin_table, 5, 0.0, 3.0)
        assert result.converged
        assert abs(math.sin(result.x)) <= 1e-6
        assert abs(result.residual) <= 1e-10

        reference = bisect(lambda x: interpolate_at(sin_table, x, 5, 0).values[0], 3.0, 3.3)
        assert result.x == pytest.approx(reference, abs=1e-9)

    def test_linear_table_one_step(self):
        table = load_table(b"0 0\n1 1\n")
        result = newton_root(table, 1, 0.5, 0.9)
        assert result.x == pytest.approx(0.5, abs=1e-15)
        assert result.iterations == 1
        assert result.converged

    def test_steep_linear_table(self):
        table = load_table(b"0 0\n1 2\n")
        result = newton_root(table, 1, 1.0, 0.9)
        assert result.x == pytest.approx(0.5, abs=1e-15)
        assert result.iterations == 1

    def test_already_at_root(self):
        table = load_table(b"0 0\n1 1\n")
        result = newton_root(table, 1, 0.5, 0.5)
        assert result.iterations == 0
        assert result.converged

    def test_flat_slope(self, square_table):
        with pytest.raises(DerivativeVanished):
            newton_root(square_table, 2, -1.0, 0.0)

    def test_start_outside_table(self, sin_table):
        with pytest.raises(OutOfDomain):
            newton_root(sin_table, 3, 0.0, 7.0)

    def test_iteration_limit(self, sin_table):
        result = newton_root(sin_table, 3, 0.5, 2.0, SolverSettings(max_iter=1))
        assert result.iterations <= 1

    @pytest.mark.parametrize("x0", [0.1, 1.0, 2.5, 4.0, 5.5, 6.2])
    @pytest.mark.parametrize("target", [-0.9, -0.3, 0.0, 0.4, 0.9])
    def test_iterates_stay_in_table(self, sin_table, x0, target):
        settings = SolverSettings()
        try:
            result = newton_root(sin_table, 4, target, x0, settings)
        except DerivativeVanished:
            return
        assert sin_table.lower <= result.x <= sin_table.upper
        assert result.iterations <= settings.max_iter
        if result.converged:
            value = interpolate_at(sin_table, result.x, 4, 0).values[0]
            assert abs(value - target) <= settings.tol_residual

    def test_deterministic(self, sin_table):
        assert newton_root(sin_table, 5, 0.3, 0.5) == newton_root(sin_table, 5, 0.3, 0.5)


class TestFindExtremum:
    def test_parabola_minimum(self, square_table):
        result = find_extremum(square_table, 2, 0.3)
        assert abs(result.x) <= 1e-12
        assert result.kind is ExtremumKind.MINIMUM
        assert result.converged

    def test_sine_maximum(self, sin_table):
        result = find_extremum(sin_table, 4, 1.4)
        assert result.kind is ExtremumKind.MAXIMUM
        assert result.converged
        assert result.x == pytest.approx(math.pi / 2, abs=1e-4)
        assert result.value == pytest.approx(1.0, abs=1e-6)

        reference = golden_section_max(lambda x: interpolate_at(sin_table, x, 4, 0).values[0], 1.45, 1.7)
        assert result.x == pytest.approx(reference, abs=1e-6)

    def test_sine_minimum(self, sin_table):
        result = find_extremum(sin_table, 5, 4.5)
        assert result.kind is ExtremumKind.MINIMUM
        assert result.x == pytest.approx(3 * math.pi / 2, abs=1e-4)

    def test_straight_line_has_no_curvature(self):
        table = sample_function(lambda x: 2 * x + 1, 0.0, 1.0, 5)
        with pytest.raises(DerivativeVanished):
            find_extremum(table, 2, 0.5)

    def test_needs_degree_two(self, sin_table):
        with pytest.raises(InvalidDegree):
            find_extremum(sin_table, 1, 1.0)

    def test_start_outside_table(self, square_table):
        with pytest.raises(OutOfDomain):
            find_extremum(square_table, 2, -1.5)


class TestSolverSettings:
    def test_defaults(self):
        settings = SolverSettings()
        assert settings.tol_residual == 1e-10
        assert settings.max_iter == 50

    def test_floor_scales_with_table(self):
        table = load_table(b"0 0\n1 1000\n")
        assert SolverSettings().floor_for(table) == pytest.approx(1e-11)

    def test_explicit_floor(self, sin_table):
        assert SolverSettings(derivative_floor=1e-3).floor_for(sin_table) == 1e-3

    @pytest.mark.parametrize("overrides", [{"tol_residual": 0.0}, {"tol_step": -1.0}, {"max_iter": 0}])
    def test_rejects_bad_values(self, overrides):
        with pytest.raises(InvalidConfig):
            SolverSettings(**overrides)
