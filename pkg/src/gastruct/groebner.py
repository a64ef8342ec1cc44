"""Buchberger's algorithm and standard-monomial bases under graded-lex."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .polynomial import (
    OPERATOR,
    Polynomial,
    basis_key,
    grlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)


class AlgebraError(ValueError):
    """The quotient by an ideal is not a valid Artinian local algebra."""


class InfiniteColengthError(AlgebraError):
    """The ideal does not contain a pure power of some variable."""


@dataclass(frozen=True)
class Ideal:
    generators: tuple
    n: int

    def __init__(self, generators, n: int | None = None):
        gens = tuple(g for g in generators if not g.is_zero())
        if n is None:
            if not generators:
                raise ValueError("cannot infer arity of an empty generator list")
            n = generators[0].n
        for g in gens:
            if g.n != n:
                raise ValueError(f"generator {g} has arity {g.n}, expected {n}")
            if g.kind != OPERATOR:
                raise ValueError(f"ideal generators must be operator polynomials, got kind {g.kind!r}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "n", n)

    @classmethod
    def parse(cls, texts, n: int) -> "Ideal":
        from .polynomial import parse_polynomial
        return cls([parse_polynomial(t, n) for t in texts], n)

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.generators) + "]"


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple
    n: int
    leading: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "leading", tuple(g.leading_monomial() for g in self.basis))

    @property
    def initial_ideal(self) -> tuple:
        return self.leading

    def contains_one(self) -> bool:
        return any(sum(m) == 0 for m in self.leading)


def _monic(p: Polynomial) -> Polynomial:
    return p.scale(1 / p.leading_coefficient())


def reduce_polynomial(p: Polynomial, basis, leading=None) -> Polynomial:
    """Full reduction of ``p`` by ``basis`` (remainder has no divisible term)."""
    if leading is None:
        leading = [g.leading_monomial() for g in basis]
    lcs = [g.leading_coefficient() for g in basis]
    work = dict(p.terms)
    # max-heap on grlex via negated keys; stale entries are skipped
    heap = [_neg_key(m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        m = heapq.heappop(heap)[2]
        c = work.get(m)
        if c is None:
            continue
        for g, lm, lc in zip(basis, leading, lcs):
            if monomial_divides(lm, m):
                t = monomial_div(m, lm)
                f = c / lc
                for gm, gc in g.terms.items():
                    k = tuple(a + b for a, b in zip(gm, t))
                    old = work.get(k)
                    v = (old or 0) - f * gc
                    if v:
                        work[k] = v
                        if old is None:
                            heapq.heappush(heap, _neg_key(k))
                    else:
                        work.pop(k, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial._raw(remainder, p.n, p.kind)


def _neg_key(m):
    return (-sum(m), tuple(-e for e in m), m)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    L = monomial_lcm(lf, lg)
    return (f.mul_term(monomial_div(L, lf), 1 / f.leading_coefficient())
            - g.mul_term(monomial_div(L, lg), 1 / g.leading_coefficient()))


def interreduce(polys) -> list:
    """Turn a Gröbner basis into the reduced one (monic, auto-reduced, sorted).

    Only valid on a Gröbner basis: elements with a divisible leading monomial
    are dropped outright.
    """
    polys = [_monic(p) for p in polys if not p.is_zero()]
    # drop elements whose leading monomial is divisible by another's
    polys.sort(key=lambda p: grlex_key(p.leading_monomial()))
    kept = []
    for p in polys:
        lm = p.leading_monomial()
        if not any(monomial_divides(q.leading_monomial(), lm) for q in kept):
            kept.append(p)
    out = []
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        out.append(_monic(reduce_polynomial(p, others)))
    out.sort(key=lambda p: grlex_key(p.leading_monomial()), reverse=True)
    return out


def _autoreduce(polys) -> list:
    """Reduce each element by the others until nothing changes (ideal preserved)."""
    G = []
    for g in polys:
        g = _monic(g)
        if g not in G:
            G.append(g)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(G):
            others = G[:i] + G[i + 1:]
            r = reduce_polynomial(g, others) if others else g
            if r != g:
                G = others if r.is_zero() else others + [_monic(r)]
                changed = True
                break
    return G


def buchberger(ideal: Ideal) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` under graded-lex.

    Pairs are processed by the normal strategy (smallest lcm first).  A pair is
    skipped when its leading monomials are coprime, or by the chain criterion:
    some third element's leading monomial divides their lcm and both of its
    pairs with them have already been treated.
    """
    n = ideal.n
    G = _autoreduce(ideal.generators)
    if not G:
        return GroebnerBasis((), n)
    lead = [g.leading_monomial() for g in G]
    pairs = []
    pending = set()

    def add_pairs(k):
        for m in range(k):
            heapq.heappush(pairs, (grlex_key(monomial_lcm(lead[k], lead[m])), k, m))
            pending.add((k, m))

    def chain(i, j, L):
        for k, lk in enumerate(lead):
            if k != i and k != j and monomial_divides(lk, L):
                if (max(i, k), min(i, k)) not in pending and (max(j, k), min(j, k)) not in pending:
                    return True
        return False

    for k in range(len(G)):
        add_pairs(k)
    while pairs:
        (_, L), i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        if all(a == 0 or b == 0 for a, b in zip(lead[i], lead[j])) or chain(i, j, L):
            continue
        h = reduce_polynomial(s_polynomial(G[i], G[j]), G, lead)
        if not h.is_zero():
            G.append(_monic(h))
            lead.append(G[-1].leading_monomial())
            add_pairs(len(G) - 1)
            if sum(lead[-1]) == 0:
                break
    return GroebnerBasis(tuple(interreduce(G)), n)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if p.n != G.n:
        raise ValueError(f"arity mismatch: {p.n} vs {G.n}")
    return reduce_polynomial(p, G.basis, G.leading)


def is_finite_colength(G: GroebnerBasis) -> bool:
    for i in range(G.n):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) for m in G.leading):
            return False
    return True


def missing_pure_power(G: GroebnerBasis):
    """Index of the first variable with no pure power in the initial ideal, else None."""
    for i in range(G.n):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) for m in G.leading):
            return i
    return None


def standard_monomials(G: GroebnerBasis) -> list:
    """Monomials outside the initial ideal, ordered 1, S1, S2, ..., by degree."""
    i = missing_pure_power(G)
    if i is not None:
        raise InfiniteColengthError(f"infinite colength: no pure power of S{i + 1}")
    if G.contains_one():
        return []
    n = G.n
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e in seen or any(monomial_divides(lm, e) for lm in G.leading):
                    continue
                seen.add(e)
                nxt.append(e)
        frontier = nxt
    return sorted(seen, key=basis_key)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.n != J.n:
        raise ValueError(f"arity mismatch: {I.n} vs {J.n}")
    return buchberger(I).basis == buchberger(J).basis


def ideal_contains(G: GroebnerBasis, p: Polynomial) -> bool:
    return normal_form(p, G).is_zero()


def s_pairs_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Buchberger's criterion, checked directly on every pair."""
    B = G.basis
    return all(
        reduce_polynomial(s_polynomial(B[i], B[j]), B).is_zero()
        for i in range(len(B)) for j in range(i)
    )


def colength(G: GroebnerBasis) -> int:
    return len(standard_monomials(G))


def coordinates(p: Polynomial, basis_index: dict, length: int) -> list:
    """Coefficient vector of a normal form in a standard-monomial basis."""
    v = [Fraction(0)] * length
    for m, c in p.terms.items():
        v[basis_index[m]] = c
    return v
