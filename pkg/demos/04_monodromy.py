"""
Monodromy and non-degeneracy
============================

Phases are tracked through their exponents in Q(t).
"""
from virfusion.braiding import is_transparent, monodromy_exponents, nondegeneracy_scan
from virfusion.verma import KacLabel

for z, e in monodromy_exponents(KacLabel(1, 2), KacLabel(1, 2)):
    print(f"L_{{1,2}} around L_{{1,2}} on {z}: exp(2 pi i * {e})")

res = is_transparent((2, 3))
w = res.witness
print(f"L_{{2,3}} is detected by {w.X} on {w.summand}; eigenvalue ratio exponent {w.ratio}")

scan = nondegeneracy_scan(6)
print("transparent objects in the 6x6 window:", [str(x) for x in scan.transparent])
