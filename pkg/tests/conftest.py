"""Shared oracles for the test suite.

Everything here is deliberately independent of the evaluation paths inside
the package: boundary-condition solutions come from a generic null-space
solve of the jump conditions, and cylinder functions come from 30-term
ascending power series of J_nu (with H1_nu assembled through the
half-integer-order reflection Y_nu = (-1)^{l+1} J_{-nu}).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from winterres import BoundaryData, GpiParams


def eq1_basis(p: GpiParams) -> list[BoundaryData]:
    """Two independent boundary-data solutions of the jump conditions.

    Rows are the two conditions, columns multiply (f+, f-, f'+, f'-); the
    null space is computed by SVD, so no package conversion code is touched.
    """
    g = p.gamma
    m = np.array([
        [-p.alpha / 2, -p.alpha / 2, 1 - g / 2, -1 - g / 2],
        [1 + np.conj(g) / 2, -1 + np.conj(g) / 2, -p.beta / 2, -p.beta / 2],
    ], dtype=complex)
    _, _, vh = np.linalg.svd(m)
    return [BoundaryData(*vh[row].conj()) for row in (2, 3)]


def random_params(rng: np.random.Generator, scale: float = 3.0) -> GpiParams:
    """A generic interaction; occasionally lands in the thinner classes."""
    kind = rng.integers(0, 4)
    alpha = float(rng.normal() * scale)
    beta = float(rng.normal() * scale)
    gamma = complex(rng.normal(), rng.normal()) * scale / 2
    if kind == 1:      # delta family
        beta, gamma = 0.0, complex(0.0, gamma.imag)
    elif kind == 2:    # intermediate family
        beta = 0.0
    return GpiParams(alpha, beta, gamma)


def bessel_j_series(nu: float, z: complex, terms: int = 30) -> complex:
    """Ascending series of J_nu(z), principal branch (use Re z > 0)."""
    half = z / 2.0
    out = 0j
    for m in range(terms):
        out += (-1) ** m * half ** (2 * m + nu) / (
            math.factorial(m) * math.gamma(m + nu + 1.0))
    return out


def hankel1_halfint(l: int, z: complex, terms: int = 30) -> complex:
    """H1_{l+1/2}(z) = J_{l+1/2}(z) + i (-1)^{l+1} J_{-l-1/2}(z)."""
    nu = l + 0.5
    return (bessel_j_series(nu, z, terms)
            + 1j * (-1) ** (l + 1) * bessel_j_series(-nu, z, terms))


def riccati_s_series(l: int, z: complex, terms: int = 30) -> complex:
    """S_l(z) = sqrt(pi z / 2) J_{l+1/2}(z), via the series oracle."""
    return cmath.sqrt(math.pi * z / 2.0) * bessel_j_series(l + 0.5, z, terms)


def riccati_xi_series(l: int, z: complex, terms: int = 30) -> complex:
    """xi_l(z) = sqrt(pi z / 2) H1_{l+1/2}(z), via the series oracle."""
    return cmath.sqrt(math.pi * z / 2.0) * hankel1_halfint(l, z, terms)
