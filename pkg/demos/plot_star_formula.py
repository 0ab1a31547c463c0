"""
Closed form versus integration for star shapes
==============================================

The star intercepts ``a_i = (s - i + 1)/(c - i + 1)`` admit a closed-form
expression for the aHP in terms of complete homogeneous polynomials.  The
integrator is compared against it on a grid.
"""
from waldbound import verify_star_formula

rep = verify_star_formula(6, 8)
print("rows:", len(rep.rows), " equal:", sum(r.equal for r in rep.rows))
ratios = {}
for r in rep.rows:
    ratios.setdefault(r.n - r.c, set()).add(r.ratio)
for k, v in sorted(ratios.items()):
    print(f"n - c = {k}: formula/integral in {sorted(str(x) for x in v)}")
