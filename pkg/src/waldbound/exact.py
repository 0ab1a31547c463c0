"""Exact rational polynomials and certified real-root location.

Rationals are :class:`fractions.Fraction`; every operation keeps them in
lowest terms with a positive denominator.  :class:`Poly` is a dense,
immutable univariate polynomial with ascending coefficients.

Real roots are isolated with Sturm sequences built on the square-free part,
starting from the Cauchy bound, and refined by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

DEFAULT_EPS = Fraction(1, 10**8)
REPORT_DIGITS = 6


def to_rat(value) -> Fraction:
    """Parse ``"p/q"``, a decimal string, an int or a Fraction exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        # floats are accepted only through their shortest repr
        return Fraction(repr(value))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(x: Fraction) -> str:
    return str(x)


def to_decimal_string(x: Fraction, digits: int = REPORT_DIGITS) -> str:
    """Round ``x`` half-even to ``digits`` places."""
    with localcontext() as ctx:
        ctx.prec = max(50, digits + len(str(abs(x.numerator) // x.denominator)) + 10)
        d = Decimal(x.numerator) / Decimal(x.denominator)
        q = d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    s = format(q, "f")
    return "0." + "0" * digits if s.startswith("-") and Decimal(s) == 0 else s


class Poly:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of ``t**i``.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # construction helpers

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> Poly:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> Poly:
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-to_rat(r), 1])
        return p

    @classmethod
    def binomial(cls, shift, n: int) -> Poly:
        """The polynomial ``binom(t + shift, n)`` in ``t``."""
        shift = to_rat(shift)
        p = cls.const(Fraction(1, math.factorial(n)))
        for i in range(n):
            p = p * cls([shift - i, 1])
        return p

    # basic properties

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                power = var if k == 1 else f"{var}^{k}"
                if a == 1:
                    body = power
                elif a.denominator == 1:
                    body = f"{a}*{power}"
                else:
                    body = f"({a})*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic

    @staticmethod
    def _coerce(other) -> Poly:
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        if self.degree < dq:
            return Poly(), self
        quot = [Fraction(0)] * (self.degree - dq + 1)
        for k in range(self.degree - dq, -1, -1):
            q = rem[k + dq] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def scale(self, c) -> Poly:
        c = to_rat(c)
        return Poly([c * a for a in self.coeffs])

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(1 / self.lead)

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    # serialization

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Poly:
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial must be a JSON array of rationals")
        return cls(to_rat(c) for c in data)


def poly_eval(p: Poly, x) -> Fraction:
    """Horner evaluation."""
    x = to_rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly, k: int = 1) -> Poly:
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = list(p.coeffs)
    for _ in range(k):
        cs = [i * c for i, c in enumerate(cs)][1:]
    return Poly(cs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def square_free_part(p: Poly) -> Poly:
    """``p / gcd(p, p')``, made monic: same distinct roots, all simple."""
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, poly_derivative(p))
    return (p // g).monic()


def cauchy_bound(p: Poly) -> Fraction:
    """Every real root of ``p`` lies strictly inside ``(-B, B)``."""
    if p.degree < 1:
        raise ValueError("Cauchy bound needs a nonconstant polynomial")
    lead = p.lead
    return 1 + max(abs(c / lead) for c in p.coeffs[:-1])


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, poly_derivative(p)]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _sign_changes(seq: Sequence[Poly], x: Fraction) -> int:
    changes = 0
    prev = 0
    for q in seq:
        v = poly_eval(q, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


class _Sturm:
    """Sturm chain of the square-free part, reusable across many queries."""

    def __init__(self, p: Poly):
        if not p:
            raise ValueError("indeterminate root count: zero polynomial")
        self.sqf = square_free_part(p)
        self.seq = sturm_sequence(self.sqf) if self.sqf.degree >= 1 else [self.sqf]

    def count(self, lo: Fraction, hi: Fraction) -> int:
        if self.sqf.degree < 1:
            return 0
        return _sign_changes(self.seq, lo) - _sign_changes(self.seq, hi)


def sturm_count(p: Poly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    lo, hi = to_rat(lo), to_rat(hi)
    if not lo < hi:
        raise ValueError("sturm_count needs lo < hi")
    return _Sturm(p).count(lo, hi)


def real_root_count(p: Poly) -> int:
    """Number of distinct real roots of a nonzero polynomial."""
    if not p:
        raise ValueError("indeterminate root count: zero polynomial")
    if p.degree < 1:
        return 0
    b = cauchy_bound(p)
    return sturm_count(p, -b, b)


@dataclass(frozen=True)
class RootInterval:
    """Closed interval ``[lo, hi]`` holding exactly one root of its polynomial."""

    lo: Fraction
    hi: Fraction
    width_bound: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("RootInterval needs lo <= hi")
        if self.hi - self.lo > self.width_bound:
            raise ValueError("RootInterval wider than its width bound")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, digits: int = REPORT_DIGITS) -> str:
        return to_decimal_string(self.midpoint, digits)

    def __contains__(self, x) -> bool:
        return self.lo <= to_rat(x) <= self.hi

    def to_json(self) -> dict:
        return {"lo": rat_str(self.lo), "hi": rat_str(self.hi),
                "width_bound": rat_str(self.width_bound)}

    @classmethod
    def from_json(cls, data: dict) -> RootInterval:
        lo, hi = to_rat(data["lo"]), to_rat(data["hi"])
        wb = to_rat(data["width_bound"]) if "width_bound" in data else hi - lo
        return cls(lo, hi, wb)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in ``[lo, hi]``."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def largest_real_root(p: Poly, eps=DEFAULT_EPS) -> RootInterval | None:
    """Certified interval of width at most ``eps`` around the largest real root.

    Returns ``None`` when ``p`` has no real root.  A root that is the simplest
    rational in the final interval is returned as a degenerate interval.
    """
    eps = to_rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if p.degree < 1:
        raise ValueError("largest_real_root needs a nonconstant polynomial")
    st = _Sturm(p)
    q = st.sqf
    b = cauchy_bound(q)
    lo, hi = -b, b
    if st.count(lo, hi) == 0:
        return None
    # invariant: the largest root lies in (lo, hi]
    while hi - lo > eps or st.count(lo, hi) != 1 or poly_eval(q, lo) == 0:
        mid = (lo + hi) / 2
        if st.count(mid, hi) >= 1:
            lo = mid
        elif poly_eval(q, mid) == 0:
            return RootInterval(mid, mid, eps)
        else:
            hi = mid
    if poly_eval(q, hi) == 0:
        return RootInterval(hi, hi, eps)
    r = simplest_between(lo, hi)
    if poly_eval(q, r) == 0:
        return RootInterval(r, r, eps)
    return RootInterval(lo, hi, eps)
