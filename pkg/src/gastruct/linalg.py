"""Exact linear algebra over the rationals and over polynomial rings.

Matrices are plain lists of rows.  Rational entries are ``Fraction``; the
polynomial routines use fraction-free (Bareiss) elimination so that generic
ranks over a rational function field are decided without sampling.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Polynomial, monomial_divides, monomial_div


def to_fractions(A):
    return [[Fraction(x) for x in row] for row in A]


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def identity(k):
    return [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def matmul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in A]


def matadd(A, B):
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)]


def matscale(A, c):
    return [[a * c for a in row] for row in A]


def is_zero_matrix(A) -> bool:
    return all(not x for row in A for x in row)


def matpow(A, k):
    R = identity(len(A))
    for _ in range(k):
        R = matmul(R, A)
    return R


def rref(A):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    M = [list(row) for row in A]
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def row_space_basis(vectors):
    """A basis (nonzero RREF rows) of the span of ``vectors``."""
    if not vectors:
        return []
    R, piv = rref(vectors)
    return R[:len(piv)]


def nullspace(A, ncols=None):
    """Basis of {v : A v = 0} as a list of vectors."""
    if not A:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    cols = len(A[0])
    R, piv = rref(A)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def in_span(vectors, v) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return rank(vectors + [v]) == rank(vectors)


def span_equal(U, W) -> bool:
    r = rank(U) if U else 0
    return r == (rank(W) if W else 0) and r == (rank(U + W) if U + W else 0)


def solve_in_span(vectors, v):
    """Coefficients c with sum c_i vectors[i] = v, or None."""
    A = transpose(vectors) if vectors else [[] for _ in v]
    aug = [row + [x] for row, x in zip(A, v)]
    R, piv = rref(aug)
    k = len(vectors)
    if k in piv:
        return None
    c = [Fraction(0)] * k
    for i, p in enumerate(piv):
        c[p] = R[i][k]
    return c


def intersect_kernels(mats, dim):
    """Basis of the common kernel of a list of ``dim``-column matrices."""
    stacked = [row for M in mats for row in M]
    return nullspace(stacked, dim) if stacked else nullspace([], dim)


def det(A) -> Fraction:
    M = [list(r) for r in A]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


class QuotientCoordinates:
    """Coordinates on A/B for subspaces B within A (given by spanning vectors)."""

    def __init__(self, A, B):
        self.sub = row_space_basis(B)
        lifts = []
        current = list(self.sub)
        for v in row_space_basis(A):
            if not in_span(current, v):
                current.append(v)
                lifts.append(v)
        self.lifts = lifts
        self.dim = len(lifts)

    def coords(self, v):
        c = solve_in_span(self.sub + self.lifts, v)
        if c is None:
            raise ValueError("vector not in the ambient subspace")
        return c[len(self.sub):]


# --------------------------------------------------------------------------
# polynomial-entried matrices

def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return p / q, raising if q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lm, lc = q.leading_monomial(), q.leading_coefficient()
    quotient = Polynomial.zero(p.n, p.kind)
    r = p
    while not r.is_zero():
        m = r.leading_monomial()
        if not monomial_divides(lm, m):
            raise ValueError("division is not exact")
        c = r.terms[m] / lc
        t = monomial_div(m, lm)
        quotient = quotient + Polynomial.monomial(t, p.n, p.kind, c)
        r = r - q.mul_term(t, c)
    return quotient


def _bareiss(M):
    """Fraction-free elimination in place; returns (rank, sign, last pivot, rows)."""
    M = [list(r) for r in M]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    prev = None
    r = 0
    sign = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if not M[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            sign = -sign
        piv = M[r][c]
        for i in range(r + 1, rows):
            new_row = list(M[i])
            for j in range(c + 1, cols):
                v = piv * M[i][j] - M[i][c] * M[r][j]
                new_row[j] = exact_divide(v, prev) if prev is not None else v
            new_row[c] = piv - piv  # zero with the right ring
            M[i] = new_row
        prev = piv
        r += 1
    return r, sign, prev, M


def poly_rank(M) -> int:
    """Rank over the fraction field of the entries' polynomial ring."""
    if not M or not M[0]:
        return 0
    return _bareiss(M)[0]


def poly_det(M) -> Polynomial:
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    r, sign, last, _ = _bareiss(M)
    if r < n:
        return M[0][0] - M[0][0]
    return last if sign == 1 else -last


def generic_combination(mats, kind="c"):
    """Sum of c_k * mats[k] with fresh parameters c_1..c_k as polynomial entries."""
    k = len(mats)
    rows, cols = len(mats[0]), len(mats[0][0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            terms = {}
            for idx, A in enumerate(mats):
                if A[i][j]:
                    e = [0] * k
                    e[idx] = 1
                    terms[tuple(e)] = Fraction(A[i][j])
            row.append(Polynomial(terms, k, kind))
        out.append(row)
    return out

