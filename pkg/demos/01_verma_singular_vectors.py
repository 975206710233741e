"""
Singular vectors in Verma modules
=================================

Build the Shapovalov form at low levels, watch its determinant vanish on
the Kac table, and pull out the singular vectors as exact kernels.
"""
from virfusion.exactalg import T
from virfusion.verma import (
    SYMBOLIC,
    detect_singular_levels,
    gram_determinant_in_h,
    gram_matrix,
    kac_h,
    raise_action,
    singular_vector,
)

# the central charge as a function of the indeterminate t
print("c =", SYMBOLIC.c)

# level-2 Gram matrix at a generic weight h = t + 1
for row in gram_matrix(2, T + 1).rows:
    print("  ", [str(x) for x in row])

# the level-2 determinant as a polynomial in h; its roots are h_{2,1} and h_{1,2}
print("det_2(h) coefficients:", [str(c) for c in gram_determinant_in_h(2)])

# scanning levels at h_{2,1}: a single singular vector, at level 2
print("detect h_{2,1}:", detect_singular_levels(kac_h((2, 1)), SYMBOLIC, 4))

# the vector itself, normalised so L_{-1}^{rs} has coefficient 1
for label in [(2, 1), (1, 3), (2, 2)]:
    v = singular_vector(label)
    killed = all(raise_action(m, v, kac_h(label)).is_zero() for m in (1, 2))
    print(f"{label}: {v.format()}   annihilated: {killed}")
