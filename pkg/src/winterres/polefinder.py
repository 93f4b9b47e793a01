"""Exhaustive resonance search in the fourth quadrant of the momentum plane.

Zeros of det lambda are localized by the argument principle: the winding
number of the balanced determinant around a rectangle equals the number of
enclosed zeros (all poles of the function live at k = 0, outside every
search region).  Rectangles are bisected until each holds at most one zero,
the surviving cells seed damped Newton iterations, and the refined roots are
deduplicated and checked against the top-level count, so no resonance inside
the requested window can be silently missed.

Phase increments along the contour are accumulated from boundary samples and
any increment of pi/2 or more is recursively bisected, which pins the total
to the correct multiple of 2 pi as long as no zero sits on the boundary
itself.  Boundary hits are detected by a magnitude floor relative to the
median sample and answered by dilating the region slightly (public counting)
or by re-splitting at a shifted fraction (internal subdivision, where
dilation would break count additivity).

Everything here is deterministic: identical inputs produce bitwise-identical
pole lists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

from .errors import WinterresError
from .gpi import GpiClass, GpiParams, canonical_real_gamma, classify, is_separated
from .krein import det_lambda, det_lambda_balanced
from .riccati import Channel

_RE_FLOOR_FACTOR = 1e-3      # excluded disc |k| < 1e-3 / R around the origin
_FLOOR_REL = 1e-8            # boundary-zero floor relative to median |f|
_MAX_PHASE_DEPTH = 48        # bisection depth per boundary segment
_MAX_TREE_DEPTH = 40         # rectangle subdivision depth cap
_MIN_CELL_FACTOR = 1e-6      # cells below 1e-6/R with count >= 2 are clusters
_RESIDUAL_TOL = 1e-9         # |det lambda| certified at returned poles
_DEDUPE_REL = 1e-8           # merge poles closer than 1e-8 |k|
_SPLIT_FRACTIONS = (0.5, 0.53125, 0.46875, 0.5625, 0.4375, 0.59375, 0.40625)
_AXIS_SLIVER = 1e-7          # top-edge offset (in 1/R) for separated couplings


class BoundaryZero(WinterresError):
    """A zero of det lambda sits on (or hugs) the requested contour."""


class NonConvergence(WinterresError):
    """Newton refinement failed to converge to a certified root."""


class AmbiguousIndex(WinterresError):
    """Two poles compete for the same asymptotic lattice index."""


class ClusteredZeros(WinterresError):
    """A near-degenerate pair resisted separation down to the cell floor."""


@dataclass(frozen=True)
class SearchRegion:
    """A rectangle [re_min, re_max] x [im_min, im_max] in the closed lower plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self) -> None:
        if not (0.0 < self.re_min < self.re_max):
            raise ValueError(f"need 0 < re_min < re_max, got [{self.re_min}, {self.re_max}]")
        if not (self.im_min <= self.im_max <= 0.0):
            raise ValueError(f"need im_min <= im_max <= 0, got [{self.im_min}, {self.im_max}]")
        if self.im_min == self.im_max:
            raise ValueError("region has zero height")

    @property
    def width(self) -> float:
        return self.re_max - self.re_min

    @property
    def height(self) -> float:
        return self.im_max - self.im_min

    def corners(self) -> list[complex]:
        """Counterclockwise boundary vertices, starting at the lower left."""
        return [complex(self.re_min, self.im_min), complex(self.re_max, self.im_min),
                complex(self.re_max, self.im_max), complex(self.re_min, self.im_max)]

    def contains(self, k: complex, slop: float = 0.0) -> bool:
        return (self.re_min - slop <= k.real <= self.re_max + slop
                and self.im_min - slop <= k.imag <= self.im_max + slop)


@dataclass(frozen=True)
class Resonance:
    """A refined pole of the resolvent in the fourth quadrant.

    ``residual`` is the raw |det lambda| at the returned momentum; ``index``
    is the position on the class lattice once assigned (ordinal before that).
    """

    index: int
    k: complex
    residual: float
    channel: Channel
    gpi_class: GpiClass


class _BoundaryTouch(Exception):
    """Internal: the contour could not be certified zero-free."""


def _phase_sum(fn, z1, z2, f1, f2, floor, depth=0) -> float:
    """Phase increment of fn from z1 to z2, bisected until below pi/2."""
    delta = cmath.phase(f2 / f1)
    if abs(delta) < 0.5 * math.pi:
        return delta
    if depth >= _MAX_PHASE_DEPTH:
        raise _BoundaryTouch
    zm = 0.5 * (z1 + z2)
    fm = fn(zm)
    if abs(fm) < floor:
        raise _BoundaryTouch
    return (_phase_sum(fn, z1, zm, f1, fm, floor, depth + 1)
            + _phase_sum(fn, zm, z2, fm, f2, floor, depth + 1))


def _winding(fn, region: SearchRegion) -> int:
    """Winding number of fn around the region boundary (exact integer).

    Raises _BoundaryTouch when a sampled magnitude falls under the relative
    floor or a phase increment cannot be tamed, both of which signal a zero
    on or very near the contour.
    """
    corners = region.corners()
    pts: list[complex] = []
    for i in range(4):
        a, b = corners[i], corners[(i + 1) % 4]
        # initial spacing ~0.4 in |z| units keeps e^{+-ikR} increments small
        n = max(8, int(abs(b - a) / 0.4) + 1)
        pts.extend(a + (b - a) * j / n for j in range(n))
    vals = [fn(z) for z in pts]
    med = sorted(abs(v) for v in vals)[len(vals) // 2]
    if med == 0.0:
        raise _BoundaryTouch
    floor = _FLOOR_REL * med
    if any(abs(v) < floor for v in vals):
        raise _BoundaryTouch
    total = 0.0
    for i in range(len(pts)):
        j = (i + 1) % len(pts)
        total += _phase_sum(fn, pts[i], pts[j], vals[i], vals[j], floor)
    n = round(total / (2.0 * math.pi))
    if abs(total / (2.0 * math.pi) - n) > 0.25:
        raise WinterresError(f"winding sum {total!r} failed to close to an integer")
    return n


def _dilate(region: SearchRegion, re_floor: float) -> SearchRegion:
    """Grow the rectangle by 1 percent per axis, clamped to the allowed domain."""
    dw = 0.005 * region.width
    dh = 0.005 * region.height
    return SearchRegion(
        re_min=max(re_floor, region.re_min - dw),
        re_max=region.re_max + dw,
        im_min=region.im_min - dh,
        im_max=min(0.0, region.im_max + dh),
    )


def count_zeros(p: GpiParams, ch: Channel, region: SearchRegion) -> int:
    """Number of zeros of det lambda inside the region, by winding count.

    If a zero is detected on the boundary the region is dilated by 1 percent
    and retried, at most five times, before BoundaryZero is raised.
    """
    re_floor = _RE_FLOOR_FACTOR / ch.radius
    if region.re_min < re_floor * (1.0 - 1e-9):
        raise ValueError(f"re_min must stay above the excluded disc {re_floor}")
    fn = lambda k: det_lambda_balanced(p, ch, k)
    current = region
    for attempt in range(6):
        try:
            return _winding(fn, current)
        except _BoundaryTouch:
            if attempt == 5:
                break
            grown = _dilate(current, re_floor)
            if grown == current:
                break
            current = grown
    raise BoundaryZero(f"zero of det lambda on the boundary of {region}")


def refine(p: GpiParams, ch: Channel, k0: complex) -> tuple[complex, float]:
    """Damped Newton on the balanced determinant from seed k0.

    The derivative is a central finite difference with step 1e-6 max(1, |k|)
    (the evaluator is smooth and cheap, and the step is sized for ~1e-10
    relative accuracy on functions of this scale).  Iteration stops when the
    step falls below 1e-12 max(1, |k|) or the raw residual |det lambda|
    below 1e-12 (the raw value, not the balanced one: the balanced free
    determinant decays deep in the lower half-plane without any zero there).
    Returns (k, |det lambda(k)|).  Raises NonConvergence after 100 steps or
    on a residual floor that damping cannot escape.
    """
    if k0 == 0:
        raise ValueError("seed must be nonzero")
    fn = lambda k: det_lambda_balanced(p, ch, k)
    k = complex(k0)
    fk = fn(k)
    for _ in range(100):
        # |det lambda| = |balanced| e^{-R Im k}
        if abs(fk) * math.exp(-ch.radius * k.imag) < 1e-12:
            return k, abs(det_lambda(p, ch, k))
        h = 1e-6 * max(1.0, abs(k))
        deriv = (fn(k + h) - fn(k - h)) / (2.0 * h)
        if deriv == 0:
            raise NonConvergence(f"vanishing derivative at k = {k}")
        step = -fk / deriv
        if abs(step) < 1e-12 * max(1.0, abs(k)):
            k += step
            return k, abs(det_lambda(p, ch, k))
        t = 1.0
        while t >= 1.0 / 1024.0:
            trial = k + t * step
            f_trial = fn(trial)
            if abs(f_trial) < abs(fk):
                k, fk = trial, f_trial
                break
            t *= 0.5
        else:
            raise NonConvergence(f"stuck at residual floor |f| = {abs(fk)} near k = {k}")
    raise NonConvergence(f"no convergence after 100 damped steps from {k0}")


def _split(region: SearchRegion, vertical: bool, frac: float) -> tuple[SearchRegion, SearchRegion]:
    if vertical:  # cut parallel to the imaginary axis
        mid = region.re_min + frac * region.width
        return (replace(region, re_max=mid), replace(region, re_min=mid))
    mid = region.im_min + frac * region.height
    return (replace(region, im_max=mid), replace(region, im_min=mid))


def default_im_min(re_max: float, radius: float) -> float:
    """Search floor deep enough for the logarithmic descent of delta poles."""
    return -(math.log(re_max * radius) + 5.0) / radius


def find_poles(p: GpiParams, ch: Channel, re_max: float,
               im_min: float | None = None) -> list[Resonance]:
    """All zeros of det lambda in [1e-3/R, re_max] x [im_min, 0], refined.

    ``im_min=None`` selects the default floor -(ln(re_max R) + 5)/R.  For
    separated interactions the top edge is lowered by a 1e-7/R sliver: their
    real-axis zeros are embedded eigenvalues, which belong to
    ``real_axis_roots``, not to the resonance list.

    The returned list is sorted by Re k, deduplicated, every pole carries
    |det lambda| < 1e-9, and its length equals the top-level winding count.
    Indices are ordinals (0, 1, ...) until ``index_poles`` assigns lattice
    positions.
    """
    re_floor = _RE_FLOOR_FACTOR / ch.radius
    if not re_max > re_floor:
        raise ValueError(f"re_max must exceed {re_floor}")
    if im_min is None:
        im_min = default_im_min(re_max, ch.radius)
    im_top = -_AXIS_SLIVER / ch.radius if is_separated(p) else 0.0
    if not im_min < im_top:
        raise ValueError(f"im_min must lie below {im_top}")
    top = SearchRegion(re_floor, re_max, im_min, im_top)
    fn = lambda k: det_lambda_balanced(p, ch, k)

    def strict_count(region: SearchRegion) -> int:
        return _winding(fn, region)

    try:
        total = strict_count(top)
    except _BoundaryTouch as exc:
        raise BoundaryZero(f"zero of det lambda on the boundary of {top}") from exc

    min_cell = _MIN_CELL_FACTOR / ch.radius
    found: list[tuple[complex, float]] = []
    stack: list[tuple[SearchRegion, int, int, bool]] = [(top, total, 0, False)]
    while stack:
        region, count, depth, rebisected = stack.pop()
        if count == 0:
            continue
        if count == 1:
            centroid = complex(0.5 * (region.re_min + region.re_max),
                               0.5 * (region.im_min + region.im_max))
            try:
                k_root, residual = refine(p, ch, centroid)
                in_cell = region.contains(k_root, slop=1e-9 * max(1.0, abs(k_root)))
            except NonConvergence:
                k_root, in_cell = None, False
            if k_root is not None and in_cell:
                found.append((k_root, residual))
                continue
            if rebisected:
                raise NonConvergence(f"could not pin the single zero of {region}")
            # one re-bisection pass: halve and push the children
            count_children = _subdivide(strict_count, region, count, depth)
            stack.extend((r, c, depth + 1, True) for r, c in count_children)
            continue
        # count >= 2
        if min(region.width, region.height) < min_cell:
            raise ClusteredZeros(f"{count} zeros in cell {region} below the size floor")
        if depth >= _MAX_TREE_DEPTH:
            raise ClusteredZeros(f"subdivision depth cap at {region}")
        for r, c in _subdivide(strict_count, region, count, depth):
            stack.append((r, c, depth + 1, rebisected))

    found.sort(key=lambda item: (item[0].real, item[0].imag))
    merged: list[tuple[complex, float]] = []
    for k_root, residual in found:
        if merged and abs(k_root - merged[-1][0]) < _DEDUPE_REL * abs(k_root):
            if residual < merged[-1][1]:
                merged[-1] = (k_root, residual)
            continue
        merged.append((k_root, residual))
    if len(merged) != total:
        raise WinterresError(
            f"pole bookkeeping failed: counted {total}, refined {len(merged)}")
    bad = [item for item in merged if item[1] >= _RESIDUAL_TOL]
    if bad:
        raise NonConvergence(f"{len(bad)} poles above the residual tolerance: {bad}")
    cls = classify(p)
    return [Resonance(i, k_root, residual, ch, cls)
            for i, (k_root, residual) in enumerate(merged)]


def _subdivide(strict_count, region: SearchRegion, count: int, depth: int):
    """Split a rectangle so that the children's counts add up to the parent's.

    The cut is placed on the longer side; when a zero sits on (or too close
    to) the candidate cut line, the fraction is shifted instead of dilating,
    which would break the partition.
    """
    vertical = region.width >= region.height
    for frac in _SPLIT_FRACTIONS:
        left, right = _split(region, vertical, frac)
        try:
            c_left = strict_count(left)
            c_right = strict_count(right)
        except _BoundaryTouch:
            continue
        if c_left + c_right == count:
            return [(left, c_left), (right, c_right)]
        # counts disagree: a zero slipped between the sampled cut lines
    raise BoundaryZero(f"no clean split line found inside {region}")


_LATTICE_SPAN = 0.6  # accept indices within this fraction of the lattice spacing


def index_poles(poles: list[Resonance], ch: Channel, cls: GpiClass,
                p: GpiParams) -> list[Resonance]:
    """Assign lattice indices n to poles sorted by Re k.

    The class-appropriate leading grid is
        delta:        Re k_n = (2 n pi + l pi + 3 pi/2) / (2R)   (alpha > 0)
                      Re k_n = (2 n pi + l pi +   pi/2) / (2R)   (alpha < 0)
        intermediate: Re k_n = (pi n + pi l/2 +   pi/2) / R      (Re gamma > 0)
                      Re k_n = (pi n + pi l/2 + 3 pi/2) / R      (Re gamma < 0)
        delta-prime:  Re k_n = pi n / R + pi (l + 1) / (2R)
    Each pole takes the nearest n; collisions are resolved monotonically and
    AmbiguousIndex is raised when that pushes a pole off its lattice cell.
    """
    if not poles:
        return []
    r, l = ch.radius, ch.l
    spacing = math.pi / r
    if cls is GpiClass.DELTA:
        alpha = canonical_real_gamma(p).alpha
        if alpha == 0:
            raise ValueError("free interaction has no resonance lattice")
        off = (l * math.pi + (1.5 if alpha > 0 else 0.5) * math.pi) / (2.0 * r)
    elif cls is GpiClass.INTERMEDIATE:
        off = (0.5 * l * math.pi + (0.5 if p.gamma.real > 0 else 1.5) * math.pi) / r
    else:
        off = (l + 1) * math.pi / (2.0 * r)

    out: list[Resonance] = []
    prev_n = -1
    for pole in sorted(poles, key=lambda q: q.k.real):
        nearest = round((pole.k.real - off) / spacing)
        n = max(nearest, prev_n + 1, 0)
        if n != nearest and abs(pole.k.real - (off + n * spacing)) > _LATTICE_SPAN * spacing:
            raise AmbiguousIndex(
                f"poles collide on the lattice near n = {nearest} (Re k = {pole.k.real})")
        out.append(replace(pole, index=n))
        prev_n = n
    return out
