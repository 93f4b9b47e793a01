"""The separated locus: embedded eigenvalues instead of resonances.

When alpha beta + |gamma|^2 = 4 with gamma real, the shell decouples the
ball from its exterior.  The interior keeps a discrete spectrum embedded in
the continuum: real zeros of det lambda, evenly spaced at high energy.  Off
the real axis nothing remains (for l = 0).

Run:  python demos/embedded_eigenvalues.py
"""

import math

from winterres import (Channel, GpiParams, det_lambda, find_poles,
                       is_separated, real_axis_roots, to_unitary)

CH = Channel(0, 1.0)

for p in (GpiParams(0, 0, 2), GpiParams(4, 1, 0), GpiParams(3, 1, 1)):
    assert is_separated(p)
    u2 = to_unitary(p).u2
    print(f"\ncoupling (alpha={p.alpha:g}, beta={p.beta:g}, gamma={p.gamma.real:g})"
          f":  u2 = {u2:.3g}  (separated)")

    roots = real_axis_roots(p, CH, k_max=30.0)
    print(f"  embedded eigenmomenta below k = 30 ({len(roots)} of them):")
    print("   " + "  ".join(f"{r:.4f}" for r in roots[:8]) + "  ...")
    spacings = [b - a for a, b in zip(roots, roots[1:])]
    print(f"  spacing drifts toward pi/R = {math.pi:.4f}: last gap {spacings[-1]:.4f}")
    worst = max(abs(det_lambda(p, CH, complex(r))) for r in roots)
    print(f"  all are zeros of det lambda: worst |det| = {worst:.1e}")

    poles = find_poles(p, CH, re_max=30.0, im_min=-2.0)
    print(f"  fourth-quadrant resonances: {len(poles)} (none expected for l = 0)")
