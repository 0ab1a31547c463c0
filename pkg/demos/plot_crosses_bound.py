"""
Upper bounds from configurations of crosses
===========================================

A cross in P^3 is a pair of lines meeting in a point.  Its asymptotic
Hilbert polynomial is ``t - 1``, and ``s`` crosses contribute ``s*(t - 1)``.
The largest root of ``t^3/6 - s*(t - 1)`` bounds the Waldschmidt constant
from above.
"""
from fractions import Fraction

from waldbound import Configuration, ahp_simplex, cross_shape, waldschmidt_bound

print("aHP of one cross:", ahp_simplex(cross_shape()))

###############################################################################
# Roots for 2..5 crosses.  Each root comes back as a certified interval.

for s in range(2, 6):
    rep = waldschmidt_bound(Configuration(3, ((cross_shape(), s),)))
    print(f"s={s}  Lambda={rep.lam}  gamma <= {rep.root_decimal()}")

###############################################################################
# With five crosses the root improves on the cruder bound 64/13.

rep = waldschmidt_bound(Configuration(3, ((cross_shape(), 5),)))
print("64/13 =", float(Fraction(64, 13)), " above root:", Fraction(64, 13) > rep.root.hi)

###############################################################################
# A single cross gives a negative root, so no useful bound.

print(waldschmidt_bound(Configuration(3, ((cross_shape(), 1),))).to_text())
