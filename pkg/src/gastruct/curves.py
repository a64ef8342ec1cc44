"""The additive group acting on truncated power series F[t]/t^N.

The action is phi_a(t) = t / (1 + a t) = t - a t^2 + a^2 t^3 - ..., the
translation action on the normalization of the cuspidal cubic written in the
local parameter t at the fixed point.  A subspace is stable when phi_a maps it
into itself for every a, i.e. when each a-coefficient of phi_a(p) lies in it.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg as la
from .polynomial import Polynomial, parse_polynomial

PARAM = "a"
SERIES = "t"
MAX_ENUMERATION_ORDER = 10


class TruncatedSeries:
    """sum_k c_k t^k mod t^N, each c_k a polynomial in parameters a1..am."""

    __slots__ = ("coeffs", "N", "params")

    def __init__(self, coeffs, N: int, params: int = 1):
        if N < 1:
            raise ValueError("truncation order must be at least 1")
        cs = []
        for c in list(coeffs)[:N]:
            if not isinstance(c, Polynomial):
                c = Polynomial.constant(Fraction(c), params, PARAM)
            elif c.n != params or c.kind != PARAM:
                raise ValueError(f"coefficient {c} is not a polynomial in {params} parameter(s)")
            cs.append(c)
        cs += [Polynomial.zero(params, PARAM)] * (N - len(cs))
        self.coeffs = tuple(cs)
        self.N = N
        self.params = params

    @classmethod
    def monomial(cls, k: int, N: int, params: int = 1, coeff=1) -> "TruncatedSeries":
        return cls([0] * k + [coeff], N, params)

    @classmethod
    def from_vector(cls, v, N: int, params: int = 1) -> "TruncatedSeries":
        return cls(list(v), N, params)

    @classmethod
    def parse(cls, text: str, N: int) -> "TruncatedSeries":
        """Read a rational polynomial in t such as ``"t^2 + 1/2*t^3"``."""
        p = parse_polynomial(text, 1, SERIES)
        return cls([p.coefficient((k,)) for k in range(N)], N)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([other], self.N, self.params)
        if other.N != self.N or other.params != self.params:
            raise ValueError("series have different truncation orders or parameter counts")
        return other

    def __add__(self, other):
        other = self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.N, self.params)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.N, self.params)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c.scale(other) for c in self.coeffs], self.N, self.params)
        if isinstance(other, Polynomial):
            return TruncatedSeries([c * other for c in self.coeffs], self.N, self.params)
        other = self._check(other)
        out = [Polynomial.zero(self.params, PARAM) for _ in range(self.N)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs[: self.N - i]):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, self.N, self.params)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncatedSeries([1], self.N, self.params)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.N == other.N
                and self.params == other.params and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.N))

    def is_parameter_free(self) -> bool:
        return all(c.degree() <= 0 for c in self.coeffs)

    def vector(self) -> list:
        """Rational coefficient vector of a parameter-free series."""
        if not self.is_parameter_free():
            raise ValueError("series depends on the parameter")
        return [c.constant_term() for c in self.coeffs]

    def parameter_coefficients(self) -> dict:
        """Map parameter monomial -> rational coefficient vector over t^0..t^(N-1)."""
        out: dict = {}
        for k, c in enumerate(self.coeffs):
            for m, v in c.terms.items():
                out.setdefault(m, [Fraction(0)] * self.N)[k] = v
        return out

    def substitute_parameters(self, images: list) -> "TruncatedSeries":
        params = images[0].n
        return TruncatedSeries([c.substitute(images) for c in self.coeffs], self.N, params)

    def order(self) -> int:
        """Index of the first nonzero coefficient, N for the zero series."""
        return next((k for k, c in enumerate(self.coeffs) if not c.is_zero()), self.N)

    def __str__(self):
        out = ""
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            sign = " + "
            if len(c.terms) == 1 and next(iter(c.terms.values())) < 0:
                sign, c = " - ", -c
            tk = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not tk:
                body = str(c)
            elif c.degree() == 0 and c.constant_term() == 1:
                body = tk
            elif len(c.terms) == 1:
                body = f"{c}*{tk}"
            else:
                body = f"({c})*{tk}"
            out += (("-" if sign == " - " else "") if not out else sign) + body
        return out or "0"

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r}, N={self.N})"


def _substitution_series(N: int, params: int, param: int) -> TruncatedSeries:
    """t (1 - a t + a^2 t^2 - ...) truncated; higher terms vanish mod t^N."""
    a = Polynomial.variable(param, params, PARAM)
    coeffs = [Polynomial.zero(params, PARAM)]
    power = Polynomial.constant(1, params, PARAM)
    for _ in range(1, N):
        coeffs.append(power)
        power = power * (-a)
    return TruncatedSeries(coeffs, N, params)


def phi_act(p: TruncatedSeries, param: int = 0) -> TruncatedSeries:
    """Substitute t -> t / (1 + a t), a the ``param``-th parameter, mod t^N."""
    s = _substitution_series(p.N, p.params, param)
    out = TruncatedSeries([], p.N, p.params)
    power = TruncatedSeries([1], p.N, p.params)
    for c in p.coeffs:
        if not c.is_zero():
            out = out + power * c
        power = power * s
    return out


@lru_cache(maxsize=None)
def _phi_monomials(N: int) -> tuple:
    """parameter_coefficients of phi_a(t^k) for k < N, used by the stability test."""
    return tuple(phi_act(TruncatedSeries.monomial(k, N)).parameter_coefficients() for k in range(N))


def group_law_check(N: int) -> bool:
    """phi_b(phi_a(p)) == phi_(a+b)(p) for every monomial p mod t^N.

    phi acts on t only, so it is linear over the parameter ring and monomials suffice.
    """
    a_plus_b = [Polynomial.variable(0, 2, PARAM) + Polynomial.variable(1, 2, PARAM)]
    for k in range(N):
        p = TruncatedSeries.monomial(k, N, params=2)
        lhs = phi_act(phi_act(p, 0), 1)
        rhs = phi_act(TruncatedSeries.monomial(k, N), 0).substitute_parameters(a_plus_b)
        if lhs != rhs:
            return False
    return True


class InvalidSubspace(ValueError):
    pass


@dataclass(frozen=True)
class SubspaceModTruncation:
    """A subspace of F[t]/t^N given by parameter-free basis series."""

    basis: tuple
    N: int

    def __init__(self, basis, N: int):
        basis = tuple(basis)
        for p in basis:
            if p.N != N:
                raise InvalidSubspace(f"basis element {p} has truncation order {p.N}, expected {N}")
            if not p.is_parameter_free():
                raise InvalidSubspace(f"basis element {p} depends on the parameter")
        if basis and la.rank([p.vector() for p in basis]) != len(basis):
            raise InvalidSubspace("basis is linearly dependent")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "N", N)

    @classmethod
    def monomial(cls, exponents, N: int) -> "SubspaceModTruncation":
        return cls([TruncatedSeries.monomial(k, N) for k in sorted(exponents)], N)

    @classmethod
    def tail(cls, k: int, N: int) -> "SubspaceModTruncation":
        """span{t^k, ..., t^(N-1)}; zero for k >= N."""
        return cls.monomial(range(k, N), N)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vectors(self) -> list:
        return [p.vector() for p in self.basis]

    def contains_vector(self, v) -> bool:
        return la.in_span(self.vectors(), v)

    def __str__(self):
        return "span{" + ", ".join(str(p) for p in self.basis) + "}"


def is_stable_subspace(V: SubspaceModTruncation) -> bool:
    """Every a-coefficient of phi_a(p), p in the basis, lies in V."""
    span = V.vectors()
    table = _phi_monomials(V.N)
    for v in span:
        image: dict = {}
        for k, c in enumerate(v):
            if not c:
                continue
            for m, w in table[k].items():
                acc = image.setdefault(m, [Fraction(0)] * V.N)
                for i, x in enumerate(w):
                    acc[i] += c * x
        for w in image.values():
            if any(w) and not la.in_span(span, w):
                return False
    return True


def tails(N: int) -> list:
    """Exponent sets of the N tails span{t^k..t^(N-1)} of m/m^N, k = 1..N."""
    return [tuple(range(k, N)) for k in range(1, N + 1)]


def monomial_subsets(N: int) -> list:
    """All subsets of {1..N-1}, smallest first, as sorted tuples."""
    exps = range(1, N)
    return [c for r in range(N) for c in combinations(exps, r)]


def _stable_exponents(args):
    exps, N = args
    return exps, is_stable_subspace(SubspaceModTruncation.monomial(exps, N))


def perturbation(N: int, rng: random.Random) -> SubspaceModTruncation:
    """A tail span{t^k..} with c t^j (1 <= j < k) added to one basis element."""
    if N < 3:
        raise ValueError("no non-monomial subspaces of m/m^N for N < 3")
    k = rng.randint(2, N - 1)
    i = rng.randint(k, N - 1)
    j = rng.randint(1, k - 1)
    c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))
    basis = []
    for e in range(k, N):
        p = TruncatedSeries.monomial(e, N)
        if e == i:
            p = p + TruncatedSeries.monomial(j, N, coeff=c)
        basis.append(p)
    return SubspaceModTruncation(basis, N)


@dataclass
class StabilityClassification:
    N: int
    stable: list
    tails: list
    perturbations_tested: int = 0
    stable_perturbations: list = field(default_factory=list)

    @property
    def chain_ok(self) -> bool:
        return sorted(self.stable) == sorted(self.tails)

    @property
    def ok(self) -> bool:
        return self.chain_ok and not self.stable_perturbations


def classify_stable_subspaces(N: int, perturbations: int = 0, seed: int = 0,
                              workers: int = 1) -> StabilityClassification:
    """Test every monomial subspace of m/m^N and ``perturbations`` random non-monomial ones."""
    if N < 1:
        raise ValueError("truncation order must be at least 1")
    if N > MAX_ENUMERATION_ORDER:
        raise ValueError(f"N = {N} too large for exhaustive enumeration (max {MAX_ENUMERATION_ORDER})")
    jobs = [(s, N) for s in monomial_subsets(N)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_stable_exponents, jobs))
    else:
        results = [_stable_exponents(j) for j in jobs]
    stable = [s for s, ok in results if ok]
    out = StabilityClassification(N, stable, tails(N))
    if perturbations and N >= 3:
        rng = random.Random(seed)
        for _ in range(perturbations):
            V = perturbation(N, rng)
            out.perturbations_tested += 1
            if is_stable_subspace(V):
                out.stable_perturbations.append(str(V))
    return out


def cusp_space(N: int) -> SubspaceModTruncation:
    """span{t^2, t^3, ...}: the conductor of the cuspidal cubic."""
    return SubspaceModTruncation.tail(2, N)


# --------------------------------------------------------------------------
# semigroups of exponents

def _validate_exponents(sigma, B: int) -> frozenset:
    if isinstance(B, bool) or not isinstance(B, int) or B < 1:
        raise ValueError(f"bound must be a positive integer, got {B!r}")
    out = set()
    for s in sigma:
        if isinstance(s, bool) or not isinstance(s, int):
            raise ValueError(f"exponent {s!r} is not an integer")
        if not 2 <= s <= B:
            raise ValueError(f"exponent {s} outside 2..{B}")
        out.add(s)
    return frozenset(out)


def semigroup_check(sigma, B: int) -> bool:
    """Is sigma + {k > B} closed under addition (sums landing <= B must lie in sigma)?"""
    S = _validate_exponents(sigma, B)
    return all(x + y in S for x in S for y in S if x + y <= B)


def ring_closure_check(sigma, B: int) -> bool:
    """Is F*1 + span{t^k : k in sigma or k > B} a ring modulo t^(B+1)?

    Computed with series products and a rank test rather than exponent sums.
    """
    S = _validate_exponents(sigma, B)
    N = B + 1
    gens = [TruncatedSeries.monomial(0, N)] + [TruncatedSeries.monomial(k, N) for k in sorted(S)]
    span = [g.vector() for g in gens]
    for i, p in enumerate(gens):
        for q in gens[i:]:
            if not la.in_span(span, (p * q).vector()):
                return False
    return True


def parse_exponent_set(text: str) -> list:
    """Read ``"2, 3"`` or ``"{3 5}"``; the empty string is the empty set."""
    body = text.strip().strip("{}").replace(",", " ").split()
    try:
        return [int(tok) for tok in body]
    except ValueError:
        raise ValueError(f"malformed exponent set {text!r}") from None
