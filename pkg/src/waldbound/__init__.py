"""Asymptotic Hilbert polynomials of limiting shapes and certified upper
bounds for Waldschmidt constants, in exact rational arithmetic."""

__version__ = "0.1.0"

from .bound import BoundReport, check_bound_against_samples, lambda_poly, waldschmidt_bound
from .exact import (
    DEFAULT_EPS,
    Poly,
    RootInterval,
    largest_real_root,
    poly_derivative,
    poly_eval,
    real_root_count,
    sturm_count,
)
from .monomial import (
    MonomialIdeal,
    alpha,
    delta_set,
    hf_quotient,
    hp_via_delta,
    ideal_intersect,
    ideal_power,
    minimalize,
    symbolic_power,
    verify_hf_leq_hp,
    waldschmidt_samples,
)
from .shape import (
    Configuration,
    MultiPoly,
    SimplexShape,
    ahp_configuration,
    ahp_simplex,
    cross_shape,
    point_shape,
    star_closed_formula,
    star_shape,
    verify_star_formula,
)
