"""
Embedding diagrams and C_1-quotients
====================================
"""
from fractions import Fraction

from virfusion.structure import (
    c1_quotient_profile,
    embedding_shape,
    generic_simple_character,
    kac_labels_of,
)
from virfusion.verma import SYMBOLIC, CentralCharge, kac_h

# recover a label from its weight; generically the answer is unique
print(kac_labels_of(kac_h((3, 2))).matches)

# the shape depends only on the sign of t and on divisibility by its numerator/denominator
for t in [None, Fraction(3, 2), Fraction(-3, 2)]:
    cc = SYMBOLIC if t is None else CentralCharge.rational(t)
    print(cc.mode, [embedding_shape(lab, cc).value for lab in [(1, 1), (2, 1), (1, 3)]])

# the C_1-quotient of L_{r,s} has one vector per level below rs
for label in [(1, 1), (2, 1), (3, 2)]:
    profile = c1_quotient_profile(label)
    print(label, "profile", profile, "dim", sum(profile))

# graded dimension of the simple quotient above its ground state
print("ch L_{2,1}:", generic_simple_character((2, 1), 10))
