"""Pole search tests: winding counts, refinement, indexing, symmetries."""

import math

import pytest

from winterres import (AmbiguousIndex, Channel, GpiClass, GpiParams,
                       NonConvergence, SearchRegion, classify, count_zeros,
                       det_lambda, find_poles, index_poles, refine)

CH = Channel(0, 1.0)
FREE = GpiParams(0, 0, 0)
DELTA = GpiParams(50, 0, 0)
INTERMEDIATE = GpiParams(0, 0, 1 + 1j)
DELTA_PRIME = GpiParams(0, 0.1, 0)

FIRST_POLE_ALPHA50 = 3.0802868857096793 - 0.0036939673286052818j


class TestSearchRegion:
    def test_valid(self):
        r = SearchRegion(0.1, 5.0, -2.0, 0.0)
        assert r.width == 4.9 and r.height == 2.0

    @pytest.mark.parametrize("args", [
        (-1.0, 5.0, -2.0, 0.0),   # negative left edge
        (5.0, 1.0, -2.0, 0.0),    # inverted real range
        (0.1, 5.0, -2.0, 0.5),    # pokes into the upper half-plane
        (0.1, 5.0, -1.0, -1.0),   # zero height
    ])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            SearchRegion(*args)

    def test_containment(self):
        r = SearchRegion(1.0, 2.0, -1.0, 0.0)
        assert r.contains(1.5 - 0.5j)
        assert not r.contains(2.5 - 0.5j)


class TestCountZeros:
    def test_free_has_none(self):
        assert count_zeros(FREE, CH, SearchRegion(0.5, 30.0, -4.0, 0.0)) == 0

    def test_regression_window_holds_two(self):
        assert count_zeros(DELTA, CH, SearchRegion(30.0, 36.0, -3.0, 0.0)) == 2

    def test_counts_add_over_a_split(self):
        whole = SearchRegion(5.0, 40.0, -2.5, -0.0005)
        left = SearchRegion(5.0, 17.3, -2.5, -0.0005)
        right = SearchRegion(17.3, 40.0, -2.5, -0.0005)
        n_whole = count_zeros(DELTA, CH, whole)
        assert n_whole > 0
        assert count_zeros(DELTA, CH, left) + count_zeros(DELTA, CH, right) == n_whole

    def test_rejects_window_inside_excluded_disc(self):
        with pytest.raises(ValueError):
            count_zeros(FREE, CH, SearchRegion(1e-5, 1.0, -1.0, 0.0))

    def test_dilation_rescues_boundary_zero(self):
        # bottom edge running exactly through a pole: the 1 percent dilation
        # moves the contour off the zero and the count still comes out right
        region = SearchRegion(2.5, 3.5, FIRST_POLE_ALPHA50.imag, 0.0)
        assert count_zeros(DELTA, CH, region) == 1


class TestRefine:
    def test_exact_seed_is_fixed_point(self):
        k, residual = refine(DELTA, CH, FIRST_POLE_ALPHA50)
        assert abs(k - FIRST_POLE_ALPHA50) < 1e-10
        assert residual < 1e-11

    def test_converges_from_offset_seed(self):
        k0 = 50 * math.pi + math.pi / 2
        seed = complex(k0 + 0.09, -0.05)
        k, residual = refine(DELTA_PRIME, CH, seed)
        assert abs(k - (158.71310560766085 - 0.003937124682068256j)) < 1e-9
        assert residual < 1e-10

    def test_no_zero_means_no_convergence(self):
        with pytest.raises(NonConvergence):
            refine(FREE, CH, 3.0 - 1.0j)

    def test_rejects_zero_seed(self):
        with pytest.raises(ValueError):
            refine(DELTA, CH, 0)


class TestFindPoles:
    def test_free_is_empty(self):
        assert find_poles(FREE, CH, re_max=25.0) == []

    def test_intermediate_plateau(self):
        poles = find_poles(INTERMEDIATE, CH, re_max=40.0, im_min=-1.0)
        tail = [p for p in poles if p.k.real > 25.0]
        assert tail
        target = -0.5 * math.log(1.5)
        for pole in tail:
            assert abs(pole.k.imag - target) < 0.1 * abs(target)

    def test_delta_prime_width_law(self):
        poles = find_poles(DELTA_PRIME, CH, re_max=52 * math.pi, im_min=-1.0)
        k0 = 50 * math.pi + math.pi / 2
        nearest = min(poles, key=lambda p: abs(p.k.real - k0))
        want = -1.0 / (0.1 * k0) ** 2
        assert abs(nearest.k.imag - want) < 0.1 * abs(want)

    def test_guarantees(self):
        poles = find_poles(DELTA, CH, re_max=40.0, im_min=-3.0)
        assert poles
        res = sorted(p.k.real for p in poles)
        assert res == [p.k.real for p in poles]  # sorted by Re k
        for pole in poles:
            assert abs(det_lambda(DELTA, CH, pole.k)) < 1e-9
            assert 1e-3 <= pole.k.real <= 40.0 and -3.0 <= pole.k.imag <= 0.0
            assert pole.gpi_class is GpiClass.DELTA

    def test_matches_independent_count(self):
        poles = find_poles(DELTA, CH, re_max=40.0, im_min=-3.0)
        n = count_zeros(DELTA, CH, SearchRegion(1e-3, 40.0, -3.0, 0.0))
        assert len(poles) == n

    def test_determinism(self):
        a = find_poles(INTERMEDIATE, CH, re_max=30.0, im_min=-1.5)
        b = find_poles(INTERMEDIATE, CH, re_max=30.0, im_min=-1.5)
        assert a == b  # bitwise-identical dataclasses

    def test_pair_symmetry(self):
        for p in (DELTA, INTERMEDIATE):
            for pole in find_poles(p, CH, re_max=30.0, im_min=-2.0):
                assert abs(det_lambda(p, CH, -pole.k.conjugate())) < 1e-8

    def test_separated_has_no_off_axis_poles(self):
        assert find_poles(GpiParams(0, 0, 2), CH, re_max=30.0, im_min=-2.0) == []

    def test_rejects_bad_window(self):
        with pytest.raises(ValueError):
            find_poles(DELTA, CH, re_max=1e-4)
        with pytest.raises(ValueError):
            find_poles(DELTA, CH, re_max=10.0, im_min=0.0)


class TestIndexPoles:
    def test_delta_prime_lattice(self):
        poles = find_poles(DELTA_PRIME, CH, re_max=52 * math.pi, im_min=-1.0)
        poles = index_poles(poles, CH, GpiClass.DELTA_PRIME, DELTA_PRIME)
        k0 = 50 * math.pi + math.pi / 2
        nearest = min(poles, key=lambda p: abs(p.k.real - k0))
        assert nearest.index == 50

    def test_delta_lattice(self):
        poles = find_poles(DELTA, CH, re_max=40.0, im_min=-3.0)
        poles = index_poles(poles, CH, GpiClass.DELTA, DELTA)
        target = 10 * math.pi + 0.75 * math.pi
        nearest = min(poles, key=lambda p: abs(p.k.real - target))
        assert nearest.index == 10

    def test_indices_strictly_increase(self):
        poles = find_poles(INTERMEDIATE, CH, re_max=35.0, im_min=-1.0)
        poles = index_poles(poles, CH, GpiClass.INTERMEDIATE, INTERMEDIATE)
        idx = [p.index for p in poles]
        assert all(b > a for a, b in zip(idx, idx[1:]))

    def test_empty_passthrough(self):
        assert index_poles([], CH, GpiClass.DELTA, DELTA) == []

    def test_collision_raises(self):
        poles = find_poles(DELTA, CH, re_max=12.0, im_min=-2.0)
        duplicated = poles + poles  # two poles per lattice point
        with pytest.raises(AmbiguousIndex):
            index_poles(duplicated, CH, GpiClass.DELTA, DELTA)
