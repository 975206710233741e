"""
Coset branching functions
=========================

Verify the decomposition of L_1(lam) (x) V_l(mu) into V_{l+1}(nu) times
Virasoro simples, with the coset parameter t = (l+3)/(l+2).
"""
from virfusion.coset import coset_central_charge, level_one_char, verify_coset

print("coset central charge:", coset_central_charge().c.format("l"))

ch = level_one_char(0, 5)
print("L_1(0), weight-0 sector:", ch.sectors[0])

for lam in (0, 1):
    for mu in (0, 1, 2):
        rep = verify_coset(lam, mu, 8)
        live = [v for v in rep.verdicts if not v.note]
        print(f"lam={lam} mu={mu}: ok={rep.ok}")
        for v in live:
            print(f"   nu={v.nu}  q^({v.exponent.format('l')})  {v.branching}")
