"""Unipotent representations exp(x1 M1 + ... + xn Mn) attached to an algebra.

The basis of R is the standard-monomial basis mu_1 = 1, mu_2, ...; the
coordinate functions f_j are the entries of exp(x.S) * 1, so
exp(x.S) = sum_j f_j mu_j inside R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

from . import linalg as la
from .artinian import ArtinianAlgebra
from .polynomial import POINT, Polynomial, basis_key


def _const(c, n):
    return Polynomial.constant(c, n, POINT)


def poly_matmul(A, B):
    n = A[0][0].n
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = _const(0, n)
            for a, Brow in zip(row, B):
                if a and Brow[j]:
                    acc = acc + a * Brow[j]
            new.append(acc)
        out.append(new)
    return out


def symbolic_exponential(mats, n: int, offset: int = 0, arity: int | None = None):
    """exp(sum_i x_(offset+i) M_i) as a matrix of point polynomials.

    ``arity`` lets the variables live in a larger ring (used for exp(x) exp(y)).
    """
    arity = n if arity is None else arity
    ell = len(mats[0]) if mats else 1
    X = [[_const(0, arity) for _ in range(ell)] for _ in range(ell)]
    for i, M in enumerate(mats):
        xi = Polynomial.variable(offset + i, arity, POINT)
        for r in range(ell):
            for c in range(ell):
                if M[r][c]:
                    X[r][c] = X[r][c] + xi.scale(M[r][c])
    E = [[_const(int(r == c), arity) for c in range(ell)] for r in range(ell)]
    term = [row[:] for row in E]
    for k in range(1, ell):
        term = poly_matmul(term, X)
        inv = Fraction(1, factorial(k))
        for r in range(ell):
            for c in range(ell):
                if term[r][c]:
                    E[r][c] = E[r][c] + term[r][c].scale(inv)
    return E


@dataclass
class Representation:
    algebra: ArtinianAlgebra
    matrices: list
    exponential: list
    coordinate_functions: list = field(default_factory=list)

    @property
    def n(self):
        return self.algebra.n

    @property
    def length(self):
        return self.algebra.length


def build_representation(R: ArtinianAlgebra) -> Representation:
    E = symbolic_exponential(R.mult_matrices, R.n)
    f = [E[j][0] for j in range(R.length)]
    return Representation(R, R.mult_matrices, E, f)


def factorizations(basis: list) -> list:
    """All triples (j, i, k) with mu_j = S_i * mu_k (0-based indices)."""
    index = {m: k for k, m in enumerate(basis)}
    out = []
    for j, mu in enumerate(basis):
        for i in range(len(mu)):
            if mu[i]:
                e = list(mu)
                e[i] -= 1
                k = index.get(tuple(e))
                if k is not None:
                    out.append((j, i, k))
    return out


@dataclass
class DerivativeReport:
    checked: list
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def check_derivative_relations(rep: Representation) -> DerivativeReport:
    """Check d f_j / d x_i = f_k for every factorization mu_j = S_i mu_k."""
    checked, failures = [], []
    f = rep.coordinate_functions
    for j, i, k in factorizations(rep.algebra.basis):
        checked.append((j, i, k))
        if f[j].diff(i) != f[k]:
            failures.append((j, i, k))
    return DerivativeReport(checked, failures)


def coefficient_matrix(polys: list) -> list:
    """Rows of coefficients of ``polys`` over their joint monomial support."""
    support = sorted({m for p in polys for m in p.terms}, key=basis_key)
    return [[p.coefficient(m) for m in support] for p in polys]


def functions_independent(polys: list) -> bool:
    if not polys:
        return True
    A = coefficient_matrix(polys)
    return la.rank(A) == len(polys) if A[0] else False


def check_solutions(rep: Representation, functions: list | None = None) -> bool:
    """Every Gröbner element kills every f_j, and the f_j are independent."""
    from .polynomial import apply_operator

    f = rep.coordinate_functions if functions is None else functions
    for g in rep.algebra.groebner.basis:
        for fj in f:
            if not apply_operator(g, fj).is_zero():
                return False
    return functions_independent(f)


def leading_monomial_check(rep: Representation) -> bool:
    """f_j's leading term, reading x_i as S_i^-1, is x^(exponents of mu_j)."""
    for mu, f in zip(rep.algebra.basis, rep.coordinate_functions):
        lead = min(f.terms, key=basis_key)
        if lead != mu or f.terms[lead] != Fraction(1, _mfact(mu)):
            return False
    return True


def _mfact(m):
    out = 1
    for e in m:
        out *= factorial(e)
    return out


def is_faithful(R: ArtinianAlgebra) -> bool:
    """No nonzero linear form in the S_i lies in the ideal."""
    vecs = [R.coords(Polynomial.variable(i, R.n)) for i in range(R.n)]
    return la.rank(vecs) == R.n


def is_cyclic_vector(mats: list, v: list) -> bool:
    """Does the algebra generated by ``mats`` applied to ``v`` span everything?"""
    dim = len(v)
    span = la.row_space_basis([v]) if any(v) else []
    frontier = list(span)
    while frontier:
        new = []
        for M in mats:
            for w in frontier:
                u = la.matvec(M, w)
                if any(u) and not la.in_span(span, u):
                    span = span + [u]
                    new.append(u)
        frontier = new
    return len(span) == dim


def cyclic_vector_check(rep: Representation) -> bool:
    return functions_independent(rep.coordinate_functions)


def fixed_locus(rep: Representation) -> list:
    """Common kernel of the M_i: the linear fixed points of the action."""
    return la.intersect_kernels(rep.matrices, rep.length)


def intertwiner_space(mats: list, sign: int = 1) -> list:
    """Basis of {T : T M_i = sign * M_i^T T for all i}."""
    ell = len(mats[0])
    rows = []
    for M in mats:
        Mt = la.transpose(M)
        for r, c in product(range(ell), repeat=2):
            # (T M)[r][c] - sign (M^T T)[r][c], T flattened row-major
            row = [Fraction(0)] * (ell * ell)
            for k in range(ell):
                row[r * ell + k] += M[k][c]
                row[k * ell + c] -= sign * Mt[r][k]
            rows.append(row)
    basis = la.nullspace(rows, ell * ell) if rows else la.nullspace([], ell * ell)
    return [[v[r * ell:(r + 1) * ell] for r in range(ell)] for v in basis]


def dual_intertwiner(rep: Representation, strict: bool = False):
    """An invertible intertwiner between rho_R and its dual, or None.

    The default solves T M_i = M_i^T T: an isomorphism of rho_R with its dual
    composed with the group automorphism x -> -x, which is an equivalence of
    structures.  ``strict=True`` solves T M_i = -M_i^T T (no automorphism).
    """
    mats = rep.matrices
    ell = rep.length
    if not mats:
        return la.identity(ell)
    space = intertwiner_space(mats, -1 if strict else 1)
    if not space:
        return None
    d = la.poly_det(la.generic_combination(space))
    if d.is_zero():
        return None
    point = nonvanishing_point(d)
    T = la.zeros(ell, ell)
    for c, B in zip(point, space):
        if c:
            T = la.matadd(T, la.matscale(B, c))
    return T


def nonvanishing_point(p: Polynomial) -> list:
    """Small non-negative integers where the nonzero polynomial ``p`` is nonzero.

    Variables are fixed one at a time; a nonzero polynomial of degree D in one
    variable cannot vanish at all of 0..D.
    """
    n, D = p.n, p.degree()
    point = []
    for i in range(n):
        for v in range(D + 1):
            images = [Polynomial.constant(c, n, p.kind) for c in point + [v]]
            images += [Polynomial.variable(j, n, p.kind) for j in range(i + 1, n)]
            q = p.substitute(images)
            if not q.is_zero():
                point.append(v)
                p = q
                break
        else:
            raise ValueError("polynomial vanishes identically")
    return point


def centralizer_dimension(M: list) -> int:
    """dim {X : XM = MX}."""
    k = len(M)
    rows = []
    for r, c in product(range(k), repeat=2):
        row = [Fraction(0)] * (k * k)
        for t in range(k):
            row[r * k + t] += M[t][c]
            row[t * k + c] -= M[r][t]
        rows.append(row)
    return len(la.nullspace(rows, k * k))


def jordan_block(size: int) -> list:
    return [[Fraction(int(c == r + 1)) for c in range(size)] for r in range(size)]


def block_diagonal(*blocks) -> list:
    size = sum(len(b) for b in blocks)
    out = la.zeros(size, size)
    off = 0
    for b in blocks:
        for r, row in enumerate(b):
            for c, x in enumerate(row):
                out[off + r][off + c] = Fraction(x)
        off += len(b)
    return out


def homomorphism_check(rep: Representation) -> bool:
    """exp(x) exp(y) == exp(x + y) in 2n variables."""
    n, mats = rep.n, rep.matrices
    Ex = symbolic_exponential(mats, n, 0, 2 * n)
    Ey = symbolic_exponential(mats, n, n, 2 * n)
    # exp(x + y): substitute x_i -> x_i + y_i into exp(x)
    images = [Polynomial.variable(i, 2 * n, POINT) + Polynomial.variable(n + i, 2 * n, POINT)
              for i in range(n)]
    Exy = [[e.substitute(images) for e in row] for row in rep.exponential]
    return poly_matmul(Ex, Ey) == Exy


def inverse_check(rep: Representation) -> bool:
    """exp(x) exp(-x) == identity."""
    n = rep.n
    neg = [-Polynomial.variable(i, n, POINT) for i in range(n)]
    Eneg = [[e.substitute(neg) for e in row] for row in rep.exponential]
    P = poly_matmul(rep.exponential, Eneg)
    ell = rep.length
    return all(P[r][c] == _const(int(r == c), n) for r in range(ell) for c in range(ell))


def evaluate_at_origin(rep: Representation) -> list:
    zero = [0] * rep.n
    return [[e.evaluate(zero) for e in row] for row in rep.exponential]


def reversed_matrix(E):
    """Reverse both row and column order (for matrices written in the opposite basis order)."""
    return [row[::-1] for row in E[::-1]]

