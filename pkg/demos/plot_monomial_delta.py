"""
Hilbert functions of monomial ideals
====================================

A monomial ideal ``K = mu * K'`` whose colon part is Artinian in
``x_0..x_{n-1}`` differs from the principal ideal ``(mu)`` by a finite
set of monomials.  That set fixes the Hilbert polynomial and shows the
Hilbert function never exceeds it.
"""
from waldbound import MonomialIdeal, delta_set, hf_quotient, hp_via_delta, verify_hf_leq_hp

K = MonomialIdeal(2, ((2, 0, 0), (1, 1, 0), (0, 3, 0)))
d = delta_set(K)
print("K =", K)
print("Delta set:", d.elements)
print("HP(t) =", hp_via_delta(K, d))
print("HF:", [hf_quotient(K, t) for t in range(8)])
print(verify_hf_leq_hp(K, 20))

###############################################################################
# A cross of lines gives an ideal whose Delta set is infinite.

cross = MonomialIdeal(3, ((1, 1, 0, 0), (0, 1, 1, 0)))
try:
    delta_set(cross)
except ValueError as exc:
    print("cross:", exc)
