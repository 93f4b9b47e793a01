"""Krein correction coefficients and the resonance denominator det lambda.

The resolvent of the coupled operator differs from the free one by a rank-two
correction built on the two solutions of the adjoint radial equation at
energy k^2 that are regular at the origin and outgoing at infinity.  Their
boundary values at the sphere reduce, after stripping cylinder-function
prefactors that cancel systematically, to products of Riccati functions at
z = k R:

    Phi1(R)    = (i / k)  S_l(z) xi_l(z)            (continuous at R)
    Phi2(R+-)  = i S_l'(z) xi_l(z) / i S_l(z) xi_l'(z)   (jumps by exactly 1)
    Phi2(Rbar) = (i / 2) (S_l(z) xi_l'(z) + S_l'(z) xi_l(z))   (mean value)
    Phi2'(R)   = i k S_l'(z) xi_l'(z)

The derivative of Phi2 is the same from both sides (the product rule puts
the discontinuous factor under a derivative on each side and the remaining
factors agree), so no one-sided convention is needed for it.  The correction
coefficients share a common denominator

    det lambda = -1 - alpha Phi1(R) + beta Phi2'(R)
                 - 2 Re(gamma) Phi2(Rbar) - (alpha beta + |gamma|^2) / 4

whose zeros in the open lower momentum half-plane are the resonances; zeros
on the positive real axis occur only for separated interactions and are
embedded eigenvalues.  The displayed expressions are evaluated on the whole
punctured plane: for half-integer cylinder order there are no branch cuts,
so analytic continuation is plain evaluation.

``det_lambda_balanced`` multiplies by the zero-free factor e^{-i k R}.  The
raw determinant contains competing e^{2 i k R} and O(1) parts; one growing
and one flat term make phase tracking along deep contours ill-conditioned,
while the balanced version splits the growth evenly and leaves the zero set
untouched.  Root finding uses the balanced form throughout.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import WinterresError
from .gpi import GpiParams, is_separated
from .riccati import Channel, OriginSingularity, riccati_s, riccati_xi


class PoleAtK(WinterresError):
    """Krein coefficients requested at a zero of det lambda."""


class NotSeparated(WinterresError):
    """Embedded-eigenvalue search requires a separated interaction."""


@dataclass(frozen=True)
class PhiBoundaryValues:
    """Boundary data of the two adjoint solutions at momentum k."""

    phi1_at_R: complex
    phi2_avg: complex
    phi2_prime: complex
    k: complex


@dataclass(frozen=True)
class KreinCoefficients:
    """The 2x2 correction-coefficient matrix and its common denominator."""

    lam: np.ndarray
    det_lambda: complex


def phi_boundary(ch: Channel, k: complex) -> PhiBoundaryValues:
    """Boundary values Phi1(R), Phi2(Rbar), Phi2'(R) at momentum k != 0."""
    k = complex(k)
    if k == 0:
        raise OriginSingularity("boundary values are singular at k = 0")
    z = k * ch.radius
    s = riccati_s(ch.l, z)
    x = riccati_xi(ch.l, z)
    phi1 = (1j / k) * s.value * x.value
    phi2_avg = 0.5j * (s.value * x.derivative + s.derivative * x.value)
    phi2_prime = 1j * k * s.derivative * x.derivative
    return PhiBoundaryValues(phi1, phi2_avg, phi2_prime, k)


def det_lambda(p: GpiParams, ch: Channel, k: complex) -> complex:
    """The pole denominator det lambda(k); analytic on the punctured plane.

    Identically -1 for the free interaction, which is the cheapest full
    cross-check of the prefactor bookkeeping above.
    """
    phi = phi_boundary(ch, k)
    q = p.coupling_product
    return (-1.0
            - p.alpha * phi.phi1_at_R
            + p.beta * phi.phi2_prime
            - 2.0 * p.gamma.real * phi.phi2_avg
            - 0.25 * q)


def det_lambda_balanced(p: GpiParams, ch: Channel, k: complex) -> complex:
    """e^{-i k R} det lambda(k): same zeros, balanced growth off the axis."""
    return cmath.exp(-1j * complex(k) * ch.radius) * det_lambda(p, ch, k)


def krein_coefficients(p: GpiParams, ch: Channel, k: complex) -> KreinCoefficients:
    """The four correction coefficients lambda_mn at momentum k.

    Numerators are exactly the displayed combinations of boundary values;
    all four share det lambda as denominator.  Raises PoleAtK within 1e-14
    of a zero of det lambda, where the coefficients cease to exist.
    """
    phi = phi_boundary(ch, k)
    det = (-1.0 - p.alpha * phi.phi1_at_R + p.beta * phi.phi2_prime
           - 2.0 * p.gamma.real * phi.phi2_avg - 0.25 * p.coupling_product)
    if abs(det) < 1e-14:
        raise PoleAtK(f"det lambda vanishes at k = {k}: resonance or eigenvalue")
    q = p.coupling_product
    g = p.gamma
    lam = np.array(
        [[(p.alpha - phi.phi2_prime * q) / det,
          (g + phi.phi2_avg * q) / det],
         [(g.conjugate() + phi.phi2_avg * q) / det,
          (-p.beta - phi.phi1_at_R * q) / det]]
    )
    return KreinCoefficients(lam, det)


def _inside_condition(p: GpiParams) -> tuple[float, float]:
    """Coefficients (c1, c2) of the decoupled interior condition.

    For separated interactions the jump conditions split into one condition
    on each side of the shell.  Eliminating the exterior entries from the
    two-row system leaves c1 f(R-) + c2 f'(R-) = 0 with real c1, c2 (gamma
    is real on the separated locus), and the interior quantization function
    g(k) = c1 S_l(kR) + c2 k S_l'(kR) is real on the real axis.
    """
    a, b, g = p.alpha, p.beta, p.gamma.real
    # rows = the two jump conditions; columns = coefficients of (f+, f'+)
    c = np.array([[-a / 2, 1 - g / 2],
                  [1 + g / 2, -b / 2]])
    if abs(c[1, 0]) + abs(c[0, 0]) > abs(c[1, 1]) + abs(c[0, 1]):
        w = (c[1, 0], -c[0, 0])
    else:
        w = (c[1, 1], -c[0, 1])
    # dot the null row into the (f-, f'-) coefficient columns
    c1 = w[0] * (-a / 2) + w[1] * (-1 + g / 2)
    c2 = w[0] * (-1 - g / 2) + w[1] * (-b / 2)
    scale = max(abs(c1), abs(c2))
    return c1 / scale, c2 / scale


def real_axis_roots(p: GpiParams, ch: Channel, k_max: float) -> list[float]:
    """Momenta of the embedded eigenvalues in (1e-3/R, k_max].

    Only meaningful for separated interactions (raises NotSeparated
    otherwise).  Roots are located by sign-change bisection on the real
    interior quantization function; each root is a zero of det lambda.
    A disc |k| < 1e-3/R around the singular point k = 0 is excluded.
    """
    if not is_separated(p):
        raise NotSeparated("real-axis root search needs a separated interaction")
    c1, c2 = _inside_condition(p)
    r = ch.radius

    def g(k: float) -> float:
        s = riccati_s(ch.l, complex(k * r))
        return (c1 * s.value + c2 * k * s.derivative).real

    k_lo = 1e-3 / r
    if k_max <= k_lo:
        return []
    step = math.pi / (24.0 * r)
    n_steps = max(2, int(math.ceil((k_max - k_lo) / step)))
    grid = [k_lo + (k_max - k_lo) * i / n_steps for i in range(n_steps + 1)]
    vals = [g(k) for k in grid]
    roots: list[float] = []
    for i in range(n_steps):
        a_k, b_k = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append(a_k)
            continue
        if fa * fb < 0.0:
            for _ in range(200):
                mid = 0.5 * (a_k + b_k)
                fm = g(mid)
                if fm == 0.0 or (b_k - a_k) < 1e-15 * mid:
                    a_k = b_k = mid
                    break
                if fa * fm < 0.0:
                    b_k, fb = mid, fm
                else:
                    a_k, fa = mid, fm
            roots.append(0.5 * (a_k + b_k))
    if vals[-1] == 0.0:
        roots.append(grid[-1])
    return roots
