"""Upper bounds for Waldschmidt constants from ``Lambda(t) = t^n/n! - aHP(t)``.

If the depths of the symbolic powers have a constant subsequence of value
``n - c``, the Waldschmidt constant is at most the largest real root of the
``c``-th derivative of ``Lambda``.  The order ``c`` is supplied by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .exact import (
    DEFAULT_EPS,
    Poly,
    RootInterval,
    largest_real_root,
    poly_derivative,
    rat_str,
    to_decimal_string,
    to_rat,
)
from .shape import Configuration, ahp_configuration


def lambda_poly(config: Configuration) -> Poly:
    n = config.n
    return Poly.monomial(n, Fraction(1, math.factorial(n))) - ahp_configuration(config)


@dataclass(frozen=True)
class BoundReport:
    lam: Poly
    derivative_order: int
    lambda_c: Poly
    root: RootInterval | None
    validity_threshold: Fraction
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if poly_derivative(self.lam, self.derivative_order) != self.lambda_c:
            raise ValueError("lambda_c is not the stated derivative of lambda")

    @property
    def has_bound(self) -> bool:
        return self.root is not None

    @property
    def bound(self) -> Fraction | None:
        """Certified upper end of the root interval."""
        return None if self.root is None else self.root.hi

    def root_decimal(self) -> str | None:
        return None if self.root is None else self.root.decimal()

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "c": self.derivative_order,
            "lambda_c": self.lambda_c.to_json(),
            "root": None if self.root is None else self.root.to_json(),
            "root_decimal": self.root_decimal(),
            "validity_threshold": rat_str(self.validity_threshold),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> BoundReport:
        root = data.get("root")
        return cls(
            lam=Poly.from_json(data["lambda"]),
            derivative_order=int(data["c"]),
            lambda_c=Poly.from_json(data["lambda_c"]),
            root=None if root is None else RootInterval.from_json(root),
            validity_threshold=to_rat(data["validity_threshold"]),
            notes=tuple(data.get("notes", ())),
        )

    def to_text(self) -> str:
        lines = [
            f"Lambda(t)      = {self.lam}",
            f"derivative c   = {self.derivative_order}",
            f"Lambda^(c)(t)  = {self.lambda_c}",
        ]
        if self.root is None:
            lines.append("largest root   = none (no real root)")
        else:
            lines.append(f"largest root   ~ {self.root.decimal()}")
            lines.append(f"  in [{self.root.lo}, {self.root.hi}]")
        lines.append(f"aHP valid for t >= {self.validity_threshold}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _root_of_derivative(lam: Poly, c: int, eps: Fraction) -> tuple[Poly, RootInterval | None]:
    lam_c = poly_derivative(lam, c)
    if lam_c.degree < 1:
        return lam_c, None
    return lam_c, largest_real_root(lam_c, eps)


def waldschmidt_bound(config: Configuration, eps=DEFAULT_EPS, c: int | None = None) -> BoundReport:
    """Bound the Waldschmidt constant by the largest root of ``Lambda^(c)``.

    ``c`` overrides the configuration's derivative order.  When the derivative
    has no real root the report carries ``root=None``; the next order is tried
    and its outcome recorded in the notes.
    """
    eps = to_rat(eps)
    if c is not None:
        config = config.with_derivative_order(c)
    c = config.derivative_order
    lam = lambda_poly(config)
    lam_c, root = _root_of_derivative(lam, c, eps)
    notes = []
    if root is None:
        notes.append(f"Lambda^({c}) has no real root; no bound at derivative order {c}")
        if c + 1 < config.n:
            _, nxt = _root_of_derivative(lam, c + 1, eps)
            if nxt is None:
                notes.append(f"retry with c={c + 1}: no real root either")
            else:
                notes.append(f"retry with c={c + 1}: largest root ~ {nxt.decimal()} "
                             f"in [{nxt.lo}, {nxt.hi}]")
    elif root.hi < 1:
        notes.append("bound below 1: the Waldschmidt constant of a nonzero ideal of a "
                     "nonempty subscheme is at least 1; check the configuration")
    return BoundReport(lam, c, lam_c, root, config.threshold, tuple(notes))


@dataclass(frozen=True)
class SampleComparison:
    sample_bound: Fraction
    sample_m: int
    root: RootInterval | None
    tighter: str  # "lambda", "samples", "equal" or "overlap"
    consistent: bool | None

    def describe(self) -> str:
        root = "none" if self.root is None else self.root.decimal()
        return (f"sample bound {self.sample_bound} (m={self.sample_m}, "
                f"{to_decimal_string(self.sample_bound)}), root bound {root}, "
                f"tighter: {self.tighter}")


def check_bound_against_samples(report: BoundReport, samples: Iterable[tuple[int, int]],
                                known=None, eps=None) -> SampleComparison:
    """Compare the root bound with the best ratio ``alpha_m / m``.

    Each ratio is itself an upper bound, the Waldschmidt constant being their
    infimum.  With ``known`` supplied, ``consistent`` says whether the root
    interval reaches it (up to the interval width).
    """
    samples = [(int(m), int(a)) for m, a in samples]
    if not samples:
        raise ValueError("no samples")
    for m, a in samples:
        if m < 1 or a < 0:
            raise ValueError("samples need m >= 1 and alpha_m >= 0")
    best_m, best_a = min(samples, key=lambda s: (Fraction(s[1], s[0]), s[0]))
    best = Fraction(best_a, best_m)
    root = report.root
    if root is None:
        tighter = "samples"
    elif root.hi < best:
        tighter = "lambda"
    elif root.lo > best:
        tighter = "samples"
    elif root.exact and root.lo == best:
        tighter = "equal"
    else:
        tighter = "overlap"
    consistent = None
    if known is not None and root is not None:
        slack = root.width_bound if eps is None else to_rat(eps)
        consistent = root.hi >= to_rat(known) - slack
    return SampleComparison(best, best_m, root, tighter, consistent)
