"""
Points in the plane
===================

``s`` general points in P^2 give ``Lambda = t^2/2 - s/2`` and therefore the
classical bound ``sqrt(s)``.  Perfect squares return exact roots.
"""
from waldbound import Configuration, point_shape, waldschmidt_bound

for s in (1, 2, 4, 10, 16, 25):
    root = waldschmidt_bound(Configuration(2, ((point_shape(2), s),))).root
    kind = "exact" if root.exact else f"width <= {root.width_bound}"
    print(f"s={s:2d}  root={root.decimal()}  ({kind})")
