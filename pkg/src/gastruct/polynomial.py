"""Exact multivariate polynomials over the rationals.

A polynomial is a sparse map from exponent tuples to nonzero ``Fraction``
coefficients.  Every polynomial carries its arity and a variable-name prefix
(its *kind*): ``"S"`` for differential operators, ``"x"`` for point
coordinates, and anything else for auxiliary parameters.

Monomials are compared in graded-lexicographic order with S1 > S2 > ... > Sn.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

OPERATOR = "S"
POINT = "x"

Monomial = tuple


def grlex_key(m: Monomial):
    """Sort key realising graded-lex: larger key means larger monomial."""
    return (sum(m), m)


def grlex_compare(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: {len(a)} vs {len(b)}")
    ka, kb = grlex_key(a), grlex_key(b)
    return (ka > kb) - (ka < kb)


def basis_key(m: Monomial):
    # degree ascending, then S1 before S2 within a degree
    return (sum(m), tuple(-e for e in m))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_factorial(m: Monomial) -> int:
    return math.prod(math.factorial(e) for e in m)


def monomials_of_degree(n: int, d: int) -> list:
    """All exponent tuples of total degree ``d`` in ``n`` variables, grlex descending."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key, reverse=True)
    return out


class Polynomial:
    """Immutable sparse polynomial with ``Fraction`` coefficients."""

    __slots__ = ("terms", "n", "kind", "_hash", "_lead")

    def __init__(self, terms: Mapping | None = None, n: int = 1, kind: str = OPERATOR):
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError(f"monomial {m} does not have arity {n}")
                if c:
                    clean[tuple(m)] = Fraction(c)
        self.terms = clean
        self.n = n
        self.kind = kind
        self._hash = None
        self._lead = None

    # construction helpers
    @classmethod
    def _raw(cls, terms: dict, n: int, kind: str) -> "Polynomial":
        p = object.__new__(cls)
        p.terms = terms
        p.n = n
        p.kind = kind
        p._hash = None
        p._lead = None
        return p

    @classmethod
    def zero(cls, n: int, kind: str = OPERATOR) -> "Polynomial":
        return cls._raw({}, n, kind)

    @classmethod
    def constant(cls, c, n: int, kind: str = OPERATOR) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({(0,) * n: c} if c else {}, n, kind)

    @classmethod
    def monomial(cls, m: Monomial, n: int | None = None, kind: str = OPERATOR, coeff=1) -> "Polynomial":
        m = tuple(m)
        return cls._raw({m: Fraction(coeff)} if coeff else {}, len(m) if n is None else n, kind)

    @classmethod
    def variable(cls, i: int, n: int, kind: str = OPERATOR) -> "Polynomial":
        """The ``i``-th variable, 0-based."""
        e = [0] * n
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)}, n, kind)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lead is None:
            self._lead = max(self.terms, key=grlex_key)
        return self._lead

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def sorted_terms(self) -> list:
        """Terms in grlex-descending order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self.terms.items() if sum(m) == d}, self.n, self.kind)

    def with_kind(self, kind: str) -> "Polynomial":
        return Polynomial._raw(dict(self.terms), self.n, kind)

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"arity mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.n, self.kind)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(terms, self.n, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.n, self.kind)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n, self.kind)
        return Polynomial._raw({m: v * c for m, v in self.terms.items()}, self.n, self.kind)

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n, self.kind)
        return Polynomial._raw(
            {monomial_mul(k, m): v * c for k, v in self.terms.items()}, self.n, self.kind
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial._raw(terms, self.n, self.kind)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, Polynomial) and other.degree() == 0:
            return self.scale(Fraction(1) / other.constant_term())
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.n, self.kind)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.n, self.kind)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution
    def diff(self, i: int) -> "Polynomial":
        """Partial derivative in the ``i``-th variable (0-based)."""
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                terms[tuple(e)] = c * m[i]
        return Polynomial._raw(terms, self.n, self.kind)

    def diff_monomial(self, m: Monomial) -> "Polynomial":
        """Apply the differential operator with exponent vector ``m``."""
        terms = {}
        for k, c in self.terms.items():
            if all(a >= b for a, b in zip(k, m)):
                factor = 1
                for a, b in zip(k, m):
                    factor *= math.perm(a, b)
                terms[monomial_div(k, m)] = c * factor
        return Polynomial._raw(terms, self.n, self.kind)

    def substitute(self, images: list, powers: dict | None = None) -> "Polynomial":
        """Replace variable i by ``images[i]`` (all images share one ring).

        ``powers`` caches images[i]^e and may be shared between calls that use
        the same images.
        """
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        ring_n, ring_kind = images[0].n, images[0].kind
        powers = {} if powers is None else powers

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[key]

        out = Polynomial.zero(ring_n, ring_kind)
        for m, c in self.terms.items():
            t = Polynomial.constant(c, ring_n, ring_kind)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for xi, e in zip(point, m):
                if e:
                    v *= Fraction(xi) ** e
            total += v
        return total

    def embed(self, n: int, offset: int = 0, kind: str | None = None) -> "Polynomial":
        """Re-express in a larger ring, placing variable i at ``offset + i``."""
        terms = {}
        for m, c in self.terms.items():
            e = [0] * n
            e[offset:offset + self.n] = m
            terms[tuple(e)] = c
        return Polynomial._raw(terms, n, kind or self.kind)

    # printing
    def var_name(self, i: int) -> str:
        if self.kind in (OPERATOR, POINT) or self.n > 1:
            return f"{self.kind}{i + 1}"
        return self.kind

    def _monomial_str(self, m: Monomial) -> str:
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(self.var_name(i))
            elif e > 1:
                parts.append(f"{self.var_name(i)}^{e}")
        return "*".join(parts)

    def print_order(self) -> list:
        """Operators print grlex-descending; point functions print lowest degree first."""
        if self.kind == POINT:
            return sorted(self.terms.items(), key=lambda t: basis_key(t[0]))
        return self.sorted_terms()

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for idx, (m, c) in enumerate(self.print_order()):
            mono = self._monomial_str(m)
            if idx == 0:
                if not mono:
                    out.append(str(c))
                elif c == 1:
                    out.append(mono)
                else:
                    out.append(f"{c}*{mono}")
            else:
                sign = " - " if c < 0 else " + "
                a = abs(c)
                if not mono:
                    out.append(f"{sign}{a}")
                elif a == 1:
                    out.append(f"{sign}{mono}")
                else:
                    out.append(f"{sign}{a}*{mono}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n={self.n}, kind={self.kind!r})"


def poly_sum(polys: Iterable[Polynomial], n: int, kind: str = OPERATOR) -> Polynomial:
    return reduce(lambda a, b: a + b, polys, Polynomial.zero(n, kind))


def apply_operator(g: Polynomial, f: Polynomial) -> Polynomial:
    """Let the operator ``g`` in S1..Sn act on ``f`` in x1..xn by partial derivatives."""
    if g.kind != OPERATOR or f.kind != POINT:
        raise ValueError(f"kind mismatch: operator must be {OPERATOR!r}, function {POINT!r}")
    if g.n != f.n:
        raise ValueError(f"arity mismatch: {g.n} vs {f.n}")
    out = Polynomial.zero(f.n, POINT)
    for m, c in g.terms.items():
        out = out + f.diff_monomial(m).scale(c)
    return out


def pair(g: Polynomial, f: Polynomial) -> Fraction:
    """Apolarity pairing: apply ``g`` to ``f`` and evaluate at the origin."""
    if g.kind != OPERATOR or f.kind != POINT:
        raise ValueError(f"kind mismatch: operator must be {OPERATOR!r}, function {POINT!r}")
    if g.n != f.n:
        raise ValueError(f"arity mismatch: {g.n} vs {f.n}")
    # only matching monomials survive evaluation at 0
    return sum(
        (c * f.terms[m] * monomial_factorial(m) for m, c in g.terms.items() if m in f.terms),
        Fraction(0),
    )


# --------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)(\d*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            ws = len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise ParseError(f"unexpected character {stripped[pos + ws]!r}", pos + ws, text)
        start = m.start(1) if m.group(1) else (m.start(2) if m.group(2) else m.start(4))
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("var", (m.group(2), m.group(3)), start))
        else:
            op = "^" if m.group(4) == "**" else m.group(4)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(stripped)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, kind: str):
        self.text = text
        self.n = n
        self.kind = kind
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if q.degree() > 0:
                    self.error("division by a non-constant", tok)
                if q.is_zero():
                    self.error("division by zero", tok)
                p = p / q
        return p

    def unary(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer literal", tok)
            return base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Polynomial.constant(val, self.n, self.kind)
        if kind == "var":
            name, idx = val
            if name != self.kind:
                raise ParseError(f"wrong variable kind {name!r}, expected {self.kind!r}", pos, self.text)
            if idx == "":
                if self.n != 1 or self.kind in (OPERATOR, POINT):
                    raise ParseError(f"variable {name!r} needs an index", pos, self.text)
                i = 1
            else:
                i = int(idx)
            if not 1 <= i <= self.n:
                raise ParseError(f"variable index {name}{i} out of range 1..{self.n}", pos, self.text)
            return Polynomial.variable(i - 1, self.n, self.kind)
        if (kind, val) == ("op", "("):
            p = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            return p
        self.error(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_polynomial(text: str, n: int, kind: str = OPERATOR) -> Polynomial:
    """Parse ``text`` such as ``"S2 - S1^2"`` into a polynomial of arity ``n``."""
    if n < 1:
        raise ValueError("arity must be positive")
    return _Parser(text, n, kind).parse()


def iter_monomials_up_to(n: int, d: int) -> Iterator[Monomial]:
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)
