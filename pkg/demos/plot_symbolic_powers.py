"""
Waldschmidt ratios from symbolic powers
=======================================

For monomial primes the symbolic power is an intersection of ordinary
powers, so ``alpha(I^(m)) / m`` can be computed exactly and compared with
the shape-side bound.
"""
from waldbound import Configuration, cross_shape, waldschmidt_bound, waldschmidt_samples
from waldbound.bound import check_bound_against_samples

samples = waldschmidt_samples([[2, 3], [1, 3]], 6, n=3)
for m, a, ratio in samples:
    print(f"m={m}  alpha={a}  ratio={ratio}")

rep = waldschmidt_bound(Configuration(3, ((cross_shape(), 1),), 1))
print("Lambda' =", rep.lambda_c, " root", rep.root_decimal())
print(check_bound_against_samples(rep, [(m, a) for m, a, _ in samples]).describe())
