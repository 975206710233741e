"""
Zhu polynomials and the generic fusion ring
===========================================
"""
from virfusion.fusion import fuse, fuse_decomps, fz_candidates, g_poly, verify_ring
from virfusion.verma import kac_weight
from virfusion.exactalg import T

# g_2 on the column side, with x the target weight and y the source weight
g2 = g_poly(2, "col")
print("g_2(x, y) =", g2.format())
print("vanishes at (h_{1,3}, h_{1,2}):", g2.eval(kac_weight(1, 3, T), kac_weight(1, 2, T)).is_zero())

# the Zhu conditions single out exactly one label in a large window
print("candidates for L_{3,1} x L_{1,2}:", fz_candidates(3, 2, 8))

# products follow an sl_2 x sl_2 pattern
print(fuse((1, 2), (1, 2)))
print(fuse((2, 2), (2, 2)))

# (L_{2,2})^2 recomputed through the bilinear extension
l22 = fuse((2, 1), (1, 2))
print(fuse_decomps(l22, l22))

report = verify_ring(4)
print("ring axioms on 4x4 window:", report.ok, report.checked)
