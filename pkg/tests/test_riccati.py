"""Riccati-Bessel function tests: closed forms, recurrence, Wronskian."""

import cmath
import math

import numpy as np
import pytest

from winterres import Channel, OriginSingularity, riccati_s, riccati_xi, wronskian

from conftest import riccati_xi_series


def closed_s(l: int, z: complex) -> complex:
    """Hand-written trigonometric forms for l <= 5."""
    s, c = cmath.sin(z), cmath.cos(z)
    if l == 0:
        return s
    if l == 1:
        return s / z - c
    if l == 2:
        return (3 / z**2 - 1) * s - (3 / z) * c
    if l == 3:
        return (15 / z**3 - 6 / z) * s - (15 / z**2 - 1) * c
    if l == 4:
        return (105 / z**4 - 45 / z**2 + 1) * s - (105 / z**3 - 10 / z) * c
    return (945 / z**5 - 420 / z**3 + 15 / z) * s - (945 / z**4 - 105 / z**2 + 1) * c


def closed_xi(l: int, z: complex) -> complex:
    """xi_l = (-i)^{l+1} e^{iz} sum_m (l+m)!/(m!(l-m)!) (i/2z)^m, l <= 5."""
    total = sum(
        math.factorial(l + m) / (math.factorial(m) * math.factorial(l - m))
        * (1j / (2 * z)) ** m
        for m in range(l + 1)
    )
    return (-1j) ** (l + 1) * cmath.exp(1j * z) * total


class TestChannel:
    def test_fields(self):
        ch = Channel(2, 0.5)
        assert ch.l == 2 and ch.radius == 0.5 and ch.nu == 2.5

    @pytest.mark.parametrize("l,r", [(-1, 1.0), (0, 0.0), (0, -2.0), (0, math.inf)])
    def test_rejects_bad_channel(self, l, r):
        with pytest.raises(ValueError):
            Channel(l, r)


class TestRiccatiS:
    def test_l0_at_half_pi(self):
        assert abs(riccati_s(0, math.pi / 2).value - 1.0) < 1e-15

    def test_l1_at_half_pi(self):
        assert abs(riccati_s(1, math.pi / 2).value - 2.0 / math.pi) < 1e-15

    def test_l0_at_pi(self):
        out = riccati_s(0, math.pi)
        assert abs(out.value) < 1e-15
        assert abs(out.derivative + 1.0) < 1e-15

    def test_entire_at_origin(self):
        assert riccati_s(0, 0).value == 0
        assert riccati_s(0, 0).derivative == 1
        assert riccati_s(3, 0).value == 0
        assert riccati_s(3, 0).derivative == 0

    @pytest.mark.parametrize("l", range(6))
    def test_matches_closed_forms(self, l):
        for z in (0.7, 2.5, 9.0 - 0.5j, 1.3 + 2.2j, 20.0, 4.0 - 3.0j):
            ref = closed_s(l, complex(z))
            got = riccati_s(l, complex(z)).value
            assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_parity(self):
        # S_l(-z) = (-1)^{l+1} S_l(z), exact for this evaluator
        for l in range(0, 21, 4):
            for z in (0.03 + 0.01j, 1.7 - 0.4j, 12.0 + 3.0j, 80.0 - 2.0j):
                a = riccati_s(l, z).value
                b = riccati_s(l, -z).value
                assert abs(b - (-1) ** (l + 1) * a) <= 1e-12 * max(1.0, abs(a))

    def test_conjugation(self):
        for l in (0, 1, 5, 13):
            for z in (2.0 + 1.0j, 0.05 - 0.02j, 30.0 + 4.0j):
                a = riccati_s(l, z).value
                b = riccati_s(l, z.conjugate()).value
                assert abs(b - a.conjugate()) <= 1e-13 * max(1.0, abs(a))

    def test_series_recurrence_agree_at_switchover(self):
        # both paths valid in a band around |z| ~ l + 2
        for l in (3, 8, 15):
            for radius in (l + 1.5, l + 2.5):
                for ang in (0.0, 0.8, -2.2):
                    z = radius * cmath.exp(1j * ang)
                    v = riccati_s(l, z)
                    ref = closed_s(l, z) if l <= 5 else None
                    if ref is not None:
                        assert abs(v.value - ref) < 1e-11 * max(1.0, abs(ref))


class TestRiccatiXi:
    def test_l0_at_one(self):
        want = complex(math.sin(1.0), -math.cos(1.0))  # -i e^{i}
        assert abs(riccati_xi(0, 1.0).value - want) < 1e-15

    def test_l0_at_i(self):
        assert abs(riccati_xi(0, 1j).value - (-1j * math.exp(-1.0))) < 1e-16

    def test_l1_at_one_vs_series_oracle(self):
        got = riccati_xi(1, 1.0).value
        ref = riccati_xi_series(1, 1.0)
        assert abs(got - ref) < 1e-12
        assert abs(got - (0.3011686789397568 - 1.3817732906760363j)) < 1e-12

    @pytest.mark.parametrize("l", range(6))
    def test_matches_closed_forms(self, l):
        for z in (0.6, 3.1, 7.0 - 1.0j, 2.0 + 2.0j, 15.0 - 0.1j):
            ref = closed_xi(l, complex(z))
            got = riccati_xi(l, complex(z)).value
            assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_origin_raises(self):
        with pytest.raises(OriginSingularity):
            riccati_xi(0, 0)
        with pytest.raises(OriginSingularity):
            riccati_xi(4, 0)


class TestWronskian:
    def test_example_l0(self):
        assert abs(wronskian(0, 1 + 0.3j) - 1j) < 1e-14

    def test_example_l3(self):
        assert abs(wronskian(3, 5 - 2j) - 1j) < 1e-10

    def test_small_argument(self):
        assert abs(wronskian(0, 1e-3) - 1j) < 1e-8

    def test_origin_raises(self):
        with pytest.raises(OriginSingularity):
            wronskian(2, 0)

    def test_identity_on_grid(self):
        # radii spanning [1e-2, 1e3] and angles spanning (-pi, pi].  Points
        # with |Im z| > 4 are skipped: there the identity pits e^{2|Im z|}
        # against machine epsilon and is unverifiable in double precision
        # regardless of the evaluator.
        radii = np.geomspace(1e-2, 1e3, 13)
        angles = np.linspace(-np.pi, np.pi, 25)[1:]
        checked = 0
        worst = 0.0
        for l in range(21):
            for r in radii:
                for ang in angles:
                    z = complex(r * math.cos(ang), r * math.sin(ang))
                    if abs(z.imag) > 4.0:
                        continue
                    worst = max(worst, abs(wronskian(l, z) - 1j))
                    checked += 1
        assert checked > 2000
        assert worst < 1e-10, f"worst Wronskian defect {worst}"
