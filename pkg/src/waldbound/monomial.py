"""Monomial ideals in ``K[x_0..x_n]``: symbolic powers of coordinate
subspace arrangements, initial degrees, Hilbert functions and the
Delta-set decomposition ``HF_K = HF_J + #Delta`` with ``J = (gcd)``.

Monomials are tuples of ``n + 1`` exponents.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exact import Poly

Monomial = tuple[int, ...]

IE_MAX_GENERATORS = 20


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(monos: Iterable[Monomial]) -> Monomial:
    monos = list(monos)
    return tuple(min(col) for col in zip(*monos))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def degrevlex_key(m: Monomial):
    """Sort key: by degree, then larger-in-degrevlex first."""
    return (sum(m), tuple(reversed(m)))


def monomials_of_degree(nvars: int, d: int):
    """All exponent vectors of total degree ``d`` in ``nvars`` variables."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for bars in itertools.combinations(range(d + nvars - 1), nvars - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + nvars - 2 - prev)
        yield tuple(e)


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(sorted(kept, key=degrevlex_key))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``n + 1`` variables given by minimal generators."""

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        for g in gens:
            if len(g) != self.n + 1:
                raise ValueError(f"monomial {list(g)} does not have {self.n + 1} exponents")
            if any(e < 0 for e in g):
                raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "generators", _minimal(gens))

    @property
    def nvars(self) -> int:
        return self.n + 1

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    __contains__ = contains

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"

    @cached_property
    def _lcm_signature(self) -> dict[int, int]:
        """Inclusion-exclusion weights: degree of lcm -> signed count."""
        terms: dict[Monomial, int] = {(0,) * self.nvars: 1}
        for g in self.generators:
            update = dict(terms)
            for m, w in terms.items():
                key = lcm(m, g)
                update[key] = update.get(key, 0) - w
            terms = {m: w for m, w in update.items() if w}
        sig: dict[int, int] = {}
        for m, w in terms.items():
            d = sum(m)
            sig[d] = sig.get(d, 0) + w
        return {d: w for d, w in sig.items() if w}

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        return cls(int(data["n"]), tuple(tuple(g) for g in data["generators"]))


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Drop every generator divisible by another one."""
    gens = [tuple(g) for g in gens]
    arities = {len(g) for g in gens}
    if len(arities) > 1:
        raise ValueError("monomials of mixed arity")
    if not gens and n is None:
        raise ValueError("cannot infer the number of variables of an empty generator set")
    if n is None:
        n = arities.pop() - 1
    return MonomialIdeal(n, tuple(gens))


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise ValueError(f"ideals live in different rings (n={I.n} and n={J.n})")


def ideal_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.n, tuple(lcm(a, b) for a in I.generators for b in J.generators))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.n, tuple(mono_mul(a, b) for a in I.generators for b in J.generators))


def ideal_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise ValueError("power must be positive")
    out = I
    for _ in range(m - 1):
        out = ideal_product(out, I)
    return out


def prime_ideal(variables: Iterable[int], n: int) -> MonomialIdeal:
    """The coordinate prime generated by the listed variables."""
    vs = sorted(set(int(v) for v in variables))
    if not vs:
        raise ValueError("a prime needs at least one variable")
    if vs[0] < 0 or vs[-1] > n:
        raise ValueError(f"variable index out of range 0..{n}")
    return MonomialIdeal(n, tuple(tuple(1 if i == v else 0 for i in range(n + 1)) for v in vs))


def _normalize_primes(primes, n: int | None) -> tuple[list[frozenset[int]], int]:
    ps = [frozenset(int(v) for v in p) for p in primes]
    if not ps:
        raise ValueError("empty prime list")
    if any(not p for p in ps):
        raise ValueError("a prime needs at least one variable")
    if n is None:
        n = max(max(p) for p in ps)
    for a, b in itertools.combinations(ps, 2):
        if a <= b or b <= a:
            raise ValueError("primes must be pairwise incomparable")
    return ps, n


def symbolic_power(primes, m: int, n: int | None = None) -> MonomialIdeal:
    """``m``-th symbolic power of the arrangement cut out by coordinate primes.

    ``primes`` lists variable-index sets, one per component; the result is the
    intersection of their ``m``-th powers.
    """
    ps, n = _normalize_primes(primes, n)
    out = None
    for p in ps:
        pm = ideal_power(prime_ideal(p, n), m)
        out = pm if out is None else ideal_intersect(out, pm)
    return out


def alpha(I: MonomialIdeal) -> int:
    """Initial degree."""
    if I.is_zero():
        raise ValueError("alpha undefined for the zero ideal")
    return min(sum(g) for g in I.generators)


def hf_quotient(I: MonomialIdeal, t: int) -> int:
    """``dim (S/I)_t``: degree-``t`` monomials outside ``I``."""
    if t < 0:
        return 0
    n = I.n
    if len(I.generators) <= IE_MAX_GENERATORS:
        return sum(w * math.comb(n + t - d, n) for d, w in I._lcm_signature.items() if d <= t)
    return sum(1 for m in monomials_of_degree(n + 1, t) if not I.contains(m))


def hf_by_enumeration(I: MonomialIdeal, t: int) -> int:
    return sum(1 for m in monomials_of_degree(I.n + 1, t) if not I.contains(m))


@dataclass(frozen=True)
class DeltaSet:
    """``Delta = {mu in M(n-1): mu in (gcd) and mu not in K}``.

    ``degree_bound`` is a proven bound on the degree of any element;
    ``stabilized_at`` is the first degree from which ``HF_K - HF_J`` was
    observed constant for ``n + 2`` consecutive degrees.
    """

    ideal: MonomialIdeal
    gcd: Monomial
    elements: tuple[Monomial, ...]
    degree_bound: int
    stabilized_at: int

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def max_degree(self) -> int:
        """Largest element degree, ``-1`` when empty."""
        return max((sum(e) for e in self.elements), default=-1)

    @property
    def j_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ideal.n, (self.gcd,))


def check_delta_precondition(K: MonomialIdeal) -> None:
    """Raise unless Delta is a finite set for ``K``.

    Requires that no generator involves ``x_n`` and that ``K : gcd`` contains
    a pure power of each of ``x_0..x_{n-1}``, which is exactly when Delta is
    finite.  Every variable dividing some generator is not enough on its own:
    ``(x0*x1, x1*x2)`` has ``x1^k`` in Delta for all ``k``.
    """
    msg = "delta set may be infinite"
    if K.is_zero():
        raise ValueError(f"{msg}: zero ideal")
    n = K.n
    if any(g[n] for g in K.generators):
        raise ValueError(f"{msg}: a generator involves the last variable x{n}")
    mu = mono_gcd(K.generators)
    for j in range(n):
        if not any(all(e == 0 for i, e in enumerate(mono_div(g, mu)) if i != j)
                   for g in K.generators):
            raise ValueError(f"{msg}: the colon ideal K : gcd has no pure power of x{j}")


def delta_set(K: MonomialIdeal) -> DeltaSet:
    check_delta_precondition(K)
    n = K.n
    mu = mono_gcd(K.generators)
    quotient = [mono_div(g, mu) for g in K.generators]
    # a standard monomial of an Artinian ideal containing x_j^{e_j} has degree <= sum(e_j - 1)
    pure = [min(q[j] for q in quotient if all(e == 0 for i, e in enumerate(q) if i != j))
            for j in range(n)]
    bound = sum(pure) - n
    deg_mu = sum(mu)
    elements: list[Monomial] = []
    d = 0
    window = n + 2
    run = 0
    last_diff = None
    last_new = -1
    stabilized_at = None
    # enumerate by degree past the proven bound, until HF_K - HF_J has settled
    while True:
        found = False
        for nu in monomials_of_degree(n, d):
            mono = mono_mul(mu, nu + (0,))
            if not K.contains(mono):
                elements.append(mono)
                found = True
        if found:
            last_new = d
        t = d + deg_mu
        diff = hf_quotient(K, t) - hf_quotient(MonomialIdeal(n, (mu,)), t)
        if diff == last_diff:
            run += 1
        else:
            run, last_diff = 1, diff
            stabilized_at = t
        if d > bound and run >= window and d - last_new >= window:
            break
        d += 1
    if last_diff != len(elements):
        raise RuntimeError("delta set enumeration disagrees with the Hilbert function difference")
    elements.sort(key=degrevlex_key)
    return DeltaSet(K, mu, tuple(elements), bound + deg_mu, stabilized_at)


def hp_of_principal(n: int, d: int) -> Poly:
    """Hilbert polynomial of ``S/(mu)`` for ``deg mu = d`` in ``n + 1`` variables."""
    return Poly.binomial(n, n) - Poly.binomial(n - d, n)


def hp_via_delta(K: MonomialIdeal, delta: DeltaSet | None = None) -> Poly:
    """Hilbert polynomial ``HP_J + #Delta``."""
    delta = delta or delta_set(K)
    return hp_of_principal(K.n, sum(delta.gcd)) + delta.size


@dataclass(frozen=True)
class HFCheck:
    holds: bool
    t_range: tuple[int, int]
    equality_from: int | None
    failures: tuple[str, ...]


def verify_hf_leq_hp(K: MonomialIdeal, t_max: int) -> HFCheck:
    """Check ``HF_K(t) <= HP_K(t)`` on ``[alpha(K) - 1, t_max]`` and
    ``HF_K(t) = HF_J(t) + #Delta`` past the top degree of Delta."""
    delta = delta_set(K)
    hp = hp_via_delta(K, delta)
    J = delta.j_ideal
    lo = max(alpha(K) - 1, 0)
    failures = []
    equality_from = None
    for t in range(lo, t_max + 1):
        hf = hf_quotient(K, t)
        hpv = hp(t)
        if hf > hpv:
            failures.append(f"HF({t})={hf} > HP({t})={hpv}")
        if hf == hpv:
            if equality_from is None:
                equality_from = t
        else:
            equality_from = None
    for t in range(max(delta.max_degree + 1, 0), t_max + 1):
        if hf_quotient(K, t) != hf_quotient(J, t) + delta.size:
            failures.append(f"HF_K({t}) != HF_J({t}) + #Delta")
    return HFCheck(not failures, (lo, t_max), equality_from, tuple(failures))


def waldschmidt_samples(primes, m_max: int, n: int | None = None) -> list[tuple[int, int, Fraction]]:
    """``(m, alpha(I^(m)), alpha(I^(m))/m)`` for ``m = 1..m_max``."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    out = []
    for m in range(1, m_max + 1):
        a = alpha(symbolic_power(primes, m, n))
        out.append((m, a, Fraction(a, m)))
    return out
