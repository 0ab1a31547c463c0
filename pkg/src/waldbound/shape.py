"""Limiting shapes and their asymptotic Hilbert polynomials.

A shape here is a coordinate simplex with intercepts ``a_1..a_c`` times the
nonnegative orthant in the remaining ``n - c`` directions.  Its asymptotic
Hilbert polynomial is the volume of the shape cut by ``x_1 + ... + x_n <= t``,
a polynomial in ``t`` once ``t >= max(a_i)``.  The volume is computed by exact
iterated integration over :class:`MultiPoly`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exact import Poly, rat_str, to_rat

Exponent = tuple[int, ...]


class MultiPoly:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError("exponent arity mismatch")
            c = to_rat(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def const(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> MultiPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): c})

    @classmethod
    def linear(cls, nvars: int, coeffs: Mapping[int, Fraction], const=0) -> MultiPoly:
        out = cls.const(nvars, const)
        for i, c in coeffs.items():
            out = out + cls.var(nvars, i, c)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.terms!r})"

    def __add__(self, other: MultiPoly) -> MultiPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            c = to_rat(other)
            return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def substitute(self, i: int, value: MultiPoly) -> MultiPoly:
        """Replace variable ``i`` by ``value``, which must not involve it."""
        if value.degree_in(i):
            raise ValueError("substituted value involves the eliminated variable")
        powers = [MultiPoly.const(self.nvars, 1)]
        out = MultiPoly(self.nvars)
        for e, c in self.terms.items():
            k = e[i]
            while len(powers) <= k:
                powers.append(powers[-1] * value)
            rest = list(e)
            rest[i] = 0
            out = out + MultiPoly(self.nvars, {tuple(rest): c}) * powers[k]
        return out

    def integrate(self, i: int, upper: MultiPoly) -> MultiPoly:
        """Definite integral in variable ``i`` from 0 to ``upper``."""
        anti: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i] += 1
            anti[tuple(f)] = c / f[i]
        # antiderivative vanishes at 0, so only the upper limit contributes
        return MultiPoly(self.nvars, anti).substitute(i, upper)

    def to_poly(self, i: int) -> Poly:
        """View as a univariate polynomial in variable ``i``."""
        coeffs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial involves other variables")
            coeffs[e[i]] = coeffs.get(e[i], 0) + c
        top = max(coeffs, default=-1)
        return Poly([coeffs.get(k, 0) for k in range(top + 1)])


@dataclass(frozen=True)
class SimplexShape:
    """``Delta(a_1..a_c) x R^{n-c}_{>=0}`` inside ``R^n``."""

    n: int
    intercepts: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "intercepts", tuple(to_rat(a) for a in self.intercepts))
        if not 1 <= self.c <= self.n:
            raise ValueError(f"need 1 <= c <= n, got c={self.c}, n={self.n}")
        if any(a <= 0 for a in self.intercepts):
            raise ValueError("intercepts must be positive")

    @property
    def c(self) -> int:
        return len(self.intercepts)

    @property
    def threshold(self) -> Fraction:
        return max(self.intercepts)

    def simplex_volume(self) -> Fraction:
        return math.prod(self.intercepts, start=Fraction(1)) / math.factorial(self.c)

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c, "intercepts": [rat_str(a) for a in self.intercepts]}

    @classmethod
    def from_json(cls, data: dict) -> SimplexShape:
        if "star" in data:
            st = data["star"]
            return star_shape(int(st["n"]), int(st["c"]), int(st["s"]))
        shape = cls(int(data["n"]), tuple(to_rat(a) for a in data["intercepts"]))
        if "c" in data and int(data["c"]) != shape.c:
            raise ValueError(f"c={data['c']} does not match {shape.c} intercepts")
        return shape


def ahp_simplex(shape: SimplexShape) -> Poly:
    """Asymptotic Hilbert polynomial of a simplex-times-orthant shape.

    Valid for ``t >= max(intercepts)``.  Variables ``0..c-1`` are the simplex
    coordinates and variable ``c`` is ``t``.
    """
    n, c, a = shape.n, shape.c, shape.intercepts
    nv = c + 1
    free = n - c
    # the n - c orthant coordinates integrate to (t - x_1 - ... - x_c)^free / free!
    slack = MultiPoly.linear(nv, {c: 1, **{i: -1 for i in range(c)}})
    f = slack ** free * Fraction(1, math.factorial(free))
    for j in range(c - 1, -1, -1):
        upper = MultiPoly.linear(nv, {i: -a[j] / a[i] for i in range(j)}, const=a[j])
        f = f.integrate(j, upper)
    return f.to_poly(c)


def star_shape(n: int, c: int, s: int) -> SimplexShape:
    """Shape of ``c``-fold intersections of ``s`` generic hyperplanes in P^n."""
    if not 1 <= c <= n:
        raise ValueError(f"need 1 <= c <= n, got c={c}, n={n}")
    if s < c:
        raise ValueError("degenerate star configuration: s < c")
    return SimplexShape(n, tuple(Fraction(s - i + 1, c - i + 1) for i in range(1, c + 1)))


def complete_homogeneous(values: Iterable[Fraction], kmax: int) -> list[Fraction]:
    """``[h_0, ..., h_kmax]`` of ``values`` via ``h_k(a, b) = h_k(a) + b h_{k-1}(a, b)``."""
    h = [Fraction(1)] + [Fraction(0)] * kmax
    for v in values:
        for k in range(1, kmax + 1):
            h[k] += v * h[k - 1]
    return h


def star_closed_formula(n: int, c: int, s: int) -> Poly:
    """The experimentally found closed expression for the star aHP, as printed.

    ``prod(a) (n-c)!/n! * sum_j binom(n, j) (-1)^(n-c-j) h_{n-c-j}(a) t^j``.
    It is not proved; :func:`verify_star_formula` compares it with the integrator.
    """
    a = star_shape(n, c, s).intercepts
    k = n - c
    h = complete_homogeneous(a, k)
    scale = math.prod(a, start=Fraction(1)) * Fraction(math.factorial(k), math.factorial(n))
    return Poly([scale * math.comb(n, j) * (-1) ** (k - j) * h[k - j] for j in range(k + 1)])


@dataclass(frozen=True)
class StarCheck:
    n: int
    c: int
    s: int
    integrated: Poly
    formula: Poly

    @property
    def equal(self) -> bool:
        return self.integrated == self.formula

    @property
    def ratio(self) -> Fraction | None:
        """Formula / integral if the two are proportional, else None."""
        if not self.integrated:
            return None
        r = self.formula.lead / self.integrated.lead
        return r if self.integrated.scale(r) == self.formula else None


@dataclass(frozen=True)
class StarFormulaReport:
    rows: tuple[StarCheck, ...]

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.rows)

    def select(self, pred) -> list[StarCheck]:
        return [r for r in self.rows if pred(r)]

    def mismatches(self) -> list[StarCheck]:
        return [r for r in self.rows if not r.equal]

    CSV_COLUMNS = ("n", "c", "s", "n_minus_c", "equal", "ratio", "integrated", "formula")

    def csv_rows(self) -> list[list[str]]:
        out = []
        for r in self.rows:
            ratio = r.ratio
            out.append([str(r.n), str(r.c), str(r.s), str(r.n - r.c),
                        "yes" if r.equal else "no",
                        "" if ratio is None else rat_str(ratio),
                        " ".join(r.integrated.to_json()), " ".join(r.formula.to_json())])
        return out


def verify_star_formula(n_max: int, s_max: int) -> StarFormulaReport:
    """Compare the closed star formula with exact integration on a grid.

    Covers ``2 <= n <= n_max``, ``1 <= c <= n``, ``c <= s <= s_max`` in
    lexicographic order.  Disagreements are recorded, not raised.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    for n in range(2, n_max + 1):
        for c in range(1, n + 1):
            for s in range(c, s_max + 1):
                rows.append(StarCheck(n, c, s, ahp_simplex(star_shape(n, c, s)),
                                      star_closed_formula(n, c, s)))
    return StarFormulaReport(tuple(rows))


@dataclass(frozen=True)
class Configuration:
    """Disjoint union of shapes with multiplicities, plus a derivative order."""

    n: int
    components: tuple[tuple[SimplexShape, int], ...] = ()
    derivative_order: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((sh, int(k)) for sh, k in self.components))
        for sh, k in self.components:
            if sh.n != self.n:
                raise ValueError(f"component in dimension {sh.n}, configuration in {self.n}")
            if k < 1:
                raise ValueError("component counts must be positive")
        if not 0 <= self.derivative_order < self.n:
            raise ValueError("derivative order must satisfy 0 <= c < n")

    @property
    def threshold(self) -> Fraction:
        return max((sh.threshold for sh, _ in self.components), default=Fraction(0))

    def with_derivative_order(self, c: int) -> Configuration:
        return Configuration(self.n, self.components, c)

    def merge(self, other: Configuration) -> Configuration:
        if other.n != self.n:
            raise ValueError("cannot merge configurations of different dimension")
        return Configuration(self.n, self.components + other.components, self.derivative_order)

    def to_json(self) -> dict:
        return {"n": self.n, "derivative_order": self.derivative_order,
                "components": [{"shape": sh.to_json(), "count": k} for sh, k in self.components]}

    @classmethod
    def from_json(cls, data: dict) -> Configuration:
        comps = []
        for item in data.get("components", []):
            if "star" in item:
                sh = SimplexShape.from_json({"star": item["star"]})
            else:
                sh = SimplexShape.from_json(item["shape"])
            comps.append((sh, int(item.get("count", 1))))
        return cls(int(data["n"]), tuple(comps), int(data.get("derivative_order", 0)))


def ahp_configuration(config: Configuration) -> Poly:
    """aHP of a disjoint union: the count-weighted sum of component aHPs."""
    total = Poly()
    for sh, k in config.components:
        total = total + ahp_simplex(sh).scale(k)
    return total


def cross_shape() -> SimplexShape:
    """Two intersecting lines in P^3: a right triangle (1, 2) times a ray."""
    return SimplexShape(3, (Fraction(1), Fraction(2)))


def point_shape(n: int) -> SimplexShape:
    return SimplexShape(n, (Fraction(1),) * n)
