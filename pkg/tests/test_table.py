import io
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nevderiv.core.errors import (
    DegreeTooLarge,
    DuplicateAbscissa,
    InvalidDegree,
    InvalidRange,
    NonFiniteSample,
    OutOfDomain,
    ParseError,
    TooFewRows,
)
from nevderiv.models import NodeSet
from nevderiv.services.neville import evaluate_derivatives
from nevderiv.services.table import (
    dump_table,
    interpolate_at,
    interpolate_many,
    load_table,
    locate_window,
    sample_function,
    window_nodes,
)

SIN_TABLE = sample_function(math.sin, 0.0, 2 * math.pi, 21)


class TestSampleFunction:
    def test_cubic_abscissas(self, cubic_table):
        xs = cubic_table.xs()
        assert len(cubic_table) == 11
        assert xs[0] == -1.0
        assert xs[-1] == 1.0
        assert xs == pytest.approx([-1.0 + 0.2 * k for k in range(11)], abs=1e-15)

    def test_sine_endpoints(self, sin_table):
        assert len(sin_table) == 21
        assert sin_table.lower == 0.0
        assert sin_table.upper == 2 * math.pi

    def test_two_points(self):
        table = sample_function(lambda x: x, 0.0, 1.0, 2)
        assert list(table.xs()) == [0.0, 1.0]
        assert list(table.ys()) == [0.0, 1.0]

    def test_reversed_interval(self):
        with pytest.raises(InvalidRange):
            sample_function(math.sin, 1.0, 0.0, 5)

    def test_empty_interval(self):
        with pytest.raises(InvalidRange):
            sample_function(math.sin, 1.0, 1.0, 5)

    def test_non_finite_sample(self):
        with pytest.raises(NonFiniteSample):
            sample_function(lambda x: math.nan if x > 0.5 else x, 0.0, 1.0, 5)


class TestLoadTable:
    def test_whitespace_separated(self):
        table = load_table(b"0 0\n1 1\n")
        assert list(table.xs()) == [0.0, 1.0]

    def test_rows_are_sorted(self):
        table = load_table(b"2 4\n0 0\n1 1\n")
        assert list(table.xs()) == [0.0, 1.0, 2.0]
        assert list(table.ys()) == [0.0, 1.0, 4.0]

    def test_commas_comments_and_blank_lines(self):
        table = load_table(b"# x, y\n\n0.5, 1e-3\n\t1.5 ,\t-2.25\n  \n")
        assert list(table.xs()) == [0.5, 1.5]
        assert list(table.ys()) == [1e-3, -2.25]

    def test_reads_streams(self):
        assert len(load_table(io.BytesIO(b"0 1\n1 2\n3 4\n"))) == 3

    def test_line_number_of_malformed_row(self):
        with pytest.raises(ParseError) as info:
            load_table(b"0 0\n# comment\n1 one\n")
        assert info.value.line_number == 3

    def test_invalid_utf8_reports_line(self):
        with pytest.raises(ParseError) as info:
            load_table(b"0 0\n\xff 1\n")
        assert info.value.line_number == 2

    def test_wrong_field_count(self):
        with pytest.raises(ParseError) as info:
            load_table(b"0 0 0\n")
        assert info.value.line_number == 1

    def test_nan_is_not_a_number(self):
        with pytest.raises(ParseError):
            load_table(b"0 nan\n1 1\n")

    def test_overflowing_literal(self):
        with pytest.raises(ParseError):
            load_table(b"0 1e999\n1 1\n")

    def test_duplicate_abscissa(self):
        with pytest.raises(DuplicateAbscissa):
            load_table(b"0 0\n1 1\n0 2\n")

    def test_single_row(self):
        with pytest.raises(TooFewRows):
            load_table(b"0 0\n")

    def test_dump_reloads(self, sin_table):
        reloaded = load_table(dump_table(sin_table).encode())
        assert reloaded.samples == sin_table.samples


class TestLocateWindow:
    @pytest.fixture
    def five(self):
        return sample_function(lambda x: x, 0.0, 4.0, 5)

    def test_even_degree_centres_on_nearest_node(self, five):
        window = locate_window(five, 2.2, 2)
        assert window.first_index == 1
        assert list(window.indices()) == [1, 2, 3]

    def test_clamped_left(self, five):
        assert locate_window(five, -5.0, 2).first_index == 0

    def test_clamped_right(self, five):
        assert locate_window(five, 100.0, 3).first_index == 1

    def test_odd_degree_middle_interval(self, five):
        assert locate_window(five, 2.5, 3).first_index == 1
        assert locate_window(five, 1.5, 1).first_index == 1

    def test_tie_goes_to_lower_node(self, five):
        assert locate_window(five, 1.5, 2).first_index == 0
        assert locate_window(five, 2.5, 2).first_index == 1

    def test_degree_too_large(self, five):
        with pytest.raises(DegreeTooLarge):
            locate_window(five, 2.0, 5)

    def test_degree_zero(self, five):
        with pytest.raises(InvalidDegree):
            locate_window(five, 2.0, 0)

    @given(x=st.floats(-1e6, 1e6), degree=st.integers(1, 20))
    def test_window_is_always_valid(self, x, degree):
        window = locate_window(SIN_TABLE, x, degree)
        assert 0 <= window.first_index <= len(SIN_TABLE) - degree - 1
        assert window.stop <= len(SIN_TABLE)

    @given(xs=st.lists(st.floats(-1.0, 8.0), min_size=2, max_size=30), degree=st.integers(1, 8))
    def test_window_moves_right_with_x(self, xs, degree):
        firsts = [locate_window(SIN_TABLE, x, degree).first_index for x in sorted(xs)]
        assert firsts == sorted(firsts)


class TestInterpolateAt:
    def test_sine_peak(self, sin_table):
        stack = interpolate_at(sin_table, math.pi / 2, 5, 1)
        assert stack.values[0] == pytest.approx(1.0, abs=1e-12)
        assert abs(stack.values[1]) < 1e-3

    def test_linear_table(self):
        table = load_table(b"0 0\n1 2\n")
        assert interpolate_at(table, 0.25, 1, 1).values == pytest.approx((0.5, 2.0), abs=1e-15)

    def test_reproduces_table_nodes(self, sin_table):
        for node in sin_table.samples:
            for degree in (1, 2, 3, 4, 5):
                value = interpolate_at(sin_table, node.x, degree, 0).values[0]
                assert abs(value - node.y) <= 1e-12

    def test_full_degree_equals_global_interpolant(self, cubic_table):
        nodes = NodeSet(nodes=cubic_table.samples)
        for x in (-0.73, 0.0, 0.5):
            local = interpolate_at(cubic_table, x, len(cubic_table) - 1, 3)
            assert local.values == evaluate_derivatives(nodes, x, 3).values

    def test_uses_window_nodes(self, sin_table):
        window = locate_window(sin_table, 2.0, 4)
        expected = evaluate_derivatives(window_nodes(sin_table, window), 2.0, 2)
        assert interpolate_at(sin_table, 2.0, 4, 2) == expected

    def test_extrapolates_by_default(self, sin_table):
        value = interpolate_at(sin_table, -0.01, 3, 0).values[0]
        window = window_nodes(sin_table, locate_window(sin_table, -0.01, 3))
        assert value == evaluate_derivatives(window, -0.01, 0).values[0]
        assert abs(value - math.sin(-0.01)) < 1e-4

    def test_strict_domain(self, sin_table):
        with pytest.raises(OutOfDomain):
            interpolate_at(sin_table, 7.0, 3, 0, strict_domain=True)

    def test_strict_domain_accepts_endpoints(self, sin_table):
        interpolate_at(sin_table, sin_table.upper, 3, 0, strict_domain=True)


def test_interpolate_many_matches_scalar_path(sin_table):
    xs = np.array([-0.2, 0.0, 0.31, 1.0, math.pi / 2, 3.3, 5.9, 2 * math.pi, 6.5])
    for degree in (2, 3, 4, 5):
        batch = interpolate_many(sin_table, xs, degree, 3)
        for k, x in enumerate(xs):
            assert tuple(batch[:, k]) == interpolate_at(sin_table, x, degree, 3).values


def test_slope_agrees_with_central_differences(sin_table):
    rng = np.random.default_rng(7)
    xs = sin_table.xs()
    accepted = 0
    while accepted < 20:
        x = float(rng.uniform(0.1, 6.1))
        if np.min(np.abs(xs - x)) < 2e-3:
            continue
        stack = interpolate_at(sin_table, x, 5, 3)
        if abs(stack.values[3]) < 0.1:
            continue

        def error(h):
            forward = interpolate_at(sin_table, x + h, 5, 0).values[0]
            backward = interpolate_at(sin_table, x - h, 5, 0).values[0]
            return abs(stack.values[1] - (forward - backward) / (2 * h))

        ratio = error(1e-3) / error(1e-4)
        assert 25 <= ratio <= 400
        accepted += 1
