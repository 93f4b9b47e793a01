"""Tour of the interaction family: classes, encodings, equivalences.

Run:  python demos/classify_tour.py
"""

import math

from winterres import (GpiParams, boundary_residual, canonical_real_gamma,
                       classify, classify_unitary, from_scale_invariant,
                       is_separated, to_transfer, to_unitary,
                       SeparatedInteraction)
from winterres.report import format_complex

EXAMPLES = [
    ("free", GpiParams(0, 0, 0)),
    ("strong shell barrier", GpiParams(50, 0, 0)),
    ("derivative coupling", GpiParams(0, 0.01, 0)),
    ("mixed-phase coupling", GpiParams(0, 0, 1 + 1j)),
    ("decoupling shell", GpiParams(4, 1, 0)),
    ("metric tree, 4 branches", from_scale_invariant(math.sqrt(4), 0.0)),
    ("rotated delta", GpiParams(50, 0, 2j)),
]

print("How the (alpha, beta, gamma) data sorts into the three families")
print("=" * 64)
for label, p in EXAMPLES:
    cls = classify(p)
    sep = "separated" if is_separated(p) else "coupled"
    print(f"\n{label}:  alpha={p.alpha:g} beta={p.beta:g} "
          f"gamma={format_complex(p.gamma)}")
    print(f"  class: {cls.value:13s}  inside/outside: {sep}")

    u = to_unitary(p)
    print(f"  unitary encoding: xi={u.xi:.6f}  u1={format_complex(u.u1)}  "
          f"u2={format_complex(u.u2)}")
    print(f"  matrix criteria agree: {classify_unitary(u) is cls}")

    try:
        t = to_transfer(p)
        print(f"  transfer encoding: chi={t.chi:.6f}  "
              f"[[{t.a:.4f}, {t.b:.4f}], [{t.c:.4f}, {t.d:.4f}]]")
    except SeparatedInteraction:
        print("  transfer encoding: none, the shell decouples the two sides")

print("\nUnitary equivalence flattens Im gamma away")
print("=" * 64)
p = GpiParams(50, 0, 2j)
q = canonical_real_gamma(p)
print(f"(50, 0, 2i)  ->  (alpha={q.alpha:g}, beta={q.beta:g}, gamma={q.gamma.real:g})")
print(f"|u2| before/after: {abs(to_unitary(p).u2):.12f} / {abs(to_unitary(q).u2):.12f}")

print("\nEvery encoding accepts exactly the same boundary data")
print("=" * 64)
from winterres import BoundaryData

alpha = 7.0
shell = GpiParams(alpha, 0, 0)
jump = BoundaryData(f_plus=1, f_minus=1, fp_plus=alpha / 2, fp_minus=-alpha / 2)
print(f"pure-jump data against the alpha={alpha:g} shell:")
print(f"  defect under (alpha, beta, gamma): "
      f"{boundary_residual(shell, jump):.2e}")
print(f"  defect under its unitary form:     "
      f"{boundary_residual(to_unitary(shell), jump):.2e}")
print(f"  defect under its transfer form:    "
      f"{boundary_residual(to_transfer(shell), jump):.2e}")
print("continuous data is rejected by the same shell:")
smooth = BoundaryData(1, 1, 0.3, 0.3)
print(f"  defect: {boundary_residual(shell, smooth):.3f}")
