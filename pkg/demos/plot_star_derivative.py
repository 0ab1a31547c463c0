"""
Stars of lines in P^4 and the derivative trick
==============================================

For a star configuration of ``s`` general hyperplanes in P^4, the
polynomial Lambda has no real root, so it says nothing.  Its first
derivative does.
"""
from waldbound import Configuration, real_root_count, star_shape, waldschmidt_bound


def star(s, c=0):
    return Configuration(4, ((star_shape(4, 3, s), 1),), c)


for s in range(4, 10):
    rep = waldschmidt_bound(star(s))
    print(f"s={s}  Lambda={rep.lam}  real roots: {real_root_count(rep.lam)}")

###############################################################################
# Taking one derivative gives a cubic with a real root.

for s in (4, 6, 9, 30, 60, 120):
    rep = waldschmidt_bound(star(s, 1))
    ratio = float(rep.root.midpoint) / (s / 6 ** (1 / 3))
    print(f"s={s:3d}  root={rep.root_decimal()}  s/3={s / 3:.4f}  root/(s/6^(1/3))={ratio:.4f}")

###############################################################################
# The ratio approaches 1 only slowly; at s = 30 it is still about 3% low.
