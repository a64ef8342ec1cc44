"""Artinian local quotients F[S1..Sn]/I and their isomorphism invariants."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import cached_property

import sympy

from . import linalg as la
from .groebner import (
    AlgebraError,
    GroebnerBasis,
    Ideal,
    buchberger,
    coordinates,
    normal_form,
    standard_monomials,
)
from .polynomial import OPERATOR, Polynomial


class NotLocalError(AlgebraError):
    """Some variable acts non-nilpotently: the quotient is not supported at the origin."""


class ZeroRingError(AlgebraError):
    """The ideal contains 1."""


class ArtinianAlgebra:
    """The quotient R = F[S1..Sn]/I with its standard-monomial basis.

    ``mult_matrices[i]`` is multiplication by S_(i+1); column k holds the
    coordinates of the normal form of S_(i+1) * basis[k].
    """

    def __init__(self, ideal: Ideal, groebner: GroebnerBasis, basis: list, mult_matrices: list):
        self.ideal = ideal
        self.groebner = groebner
        self.basis = basis
        self.index = {m: k for k, m in enumerate(basis)}
        self.mult_matrices = mult_matrices
        self.length = len(basis)
        self.n = ideal.n

    def __repr__(self):
        return f"ArtinianAlgebra({self.ideal}, length={self.length})"

    def coords(self, p: Polynomial) -> list:
        return coordinates(normal_form(p, self.groebner), self.index, self.length)

    def element(self, v) -> Polynomial:
        return Polynomial({m: c for m, c in zip(self.basis, v) if c}, self.n, OPERATOR)

    @cached_property
    def basis_matrices(self) -> list:
        """Multiplication matrices of the standard monomials mu_1..mu_l."""
        out = []
        for mu in self.basis:
            M = la.identity(self.length)
            for i, e in enumerate(mu):
                for _ in range(e):
                    M = la.matmul(self.mult_matrices[i], M)
            out.append(M)
        return out

    def element_matrix(self, v) -> list:
        M = la.zeros(self.length, self.length)
        for c, B in zip(v, self.basis_matrices):
            if c:
                M = la.matadd(M, la.matscale(B, c))
        return M

    def multiply(self, u, v) -> list:
        return la.matvec(self.element_matrix(u), v)

    @cached_property
    def maximal_ideal_powers(self) -> list:
        """Bases of m^0 = R, m^1, m^2, ... ending with the zero space."""
        powers = [la.identity(self.length)]
        while powers[-1]:
            nxt = [la.matvec(M, v) for M in self.mult_matrices for v in powers[-1]]
            powers.append(la.row_space_basis([v for v in nxt if any(v)]))
            if len(powers) > self.length + 1:
                raise NotLocalError("maximal-ideal filtration does not terminate")
        return powers


def build_algebra(ideal: Ideal) -> ArtinianAlgebra:
    """Build R = F[S]/I, checking finite colength and support at the origin."""
    G = buchberger(ideal)
    if G.contains_one():
        raise ZeroRingError("1 lies in the ideal: the quotient is the zero ring")
    basis = standard_monomials(G)
    index = {m: k for k, m in enumerate(basis)}
    ell = len(basis)
    mats = []
    for i in range(ideal.n):
        x = Polynomial.variable(i, ideal.n, OPERATOR)
        cols = [coordinates(normal_form(x.mul_term(m, 1), G), index, ell) for m in basis]
        mats.append(la.transpose(cols))
    for i, M in enumerate(mats):
        if not la.is_zero_matrix(la.matpow(M, ell)):
            raise NotLocalError(f"not supported at the origin: S{i + 1} is not nilpotent in R")
    for i in range(len(mats)):
        for j in range(i):
            if la.matmul(mats[i], mats[j]) != la.matmul(mats[j], mats[i]):
                raise AlgebraError(f"multiplication matrices of S{i + 1} and S{j + 1} do not commute")
    return ArtinianAlgebra(ideal, G, basis, mats)


def hilbert_samuel(R: ArtinianAlgebra) -> tuple:
    """chi(k) = dim m^k / m^(k+1), up to the last nonzero value."""
    dims = [len(P) for P in R.maximal_ideal_powers]
    return tuple(a - b for a, b in zip(dims, dims[1:]))


def socle(R: ArtinianAlgebra) -> list:
    return la.intersect_kernels(R.mult_matrices, R.length)


def socle_dimension(R: ArtinianAlgebra) -> int:
    return len(socle(R))


def gorenstein(R: ArtinianAlgebra) -> bool:
    return socle_dimension(R) == 1


# --------------------------------------------------------------------------
# quadratic and cubic form data

@dataclass(frozen=True)
class SystemProfile:
    """Coordinate-free summary of a linear system of quadratic forms.

    ``det_profile`` lists (degree, multiplicity) of the square-free factors of
    the determinant of a generic member; it is empty when the generic member
    is singular.
    """
    dim: int
    generic_rank: int
    det_profile: tuple


@dataclass(frozen=True)
class QuadraticData:
    single_form_rank: int | None
    image: SystemProfile | None
    kernel: SystemProfile | None


def _to_sympy(p: Polynomial, symbols):
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(symbols, m):
            t *= s ** e
        expr += t
    return expr


def sqf_profile(p: Polynomial) -> tuple:
    """Sorted (degree, multiplicity) pairs of the square-free factorization."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free factorization")
    if p.degree() == 0:
        return ()
    gens = sympy.symbols(f"z1:{p.n + 1}")
    _, factors = sympy.sqf_list(_to_sympy(p, gens), *gens)
    return tuple(sorted((sympy.Poly(f, *gens).total_degree(), m) for f, m in factors))


def system_profile(mats) -> SystemProfile:
    if not mats:
        return SystemProfile(0, 0, ())
    G = la.generic_combination(mats)
    r = la.poly_rank(G)
    prof = ()
    if r == len(G) and r > 0:
        prof = sqf_profile(la.poly_det(G))
    return SystemProfile(len(mats), r, prof)


class _Graded:
    """Lifts of bases of m/m^2 and coordinates on m^k/m^(k+1)."""

    def __init__(self, R: ArtinianAlgebra):
        self.R = R
        P = R.maximal_ideal_powers
        self.P = P
        self.quot = [la.QuotientCoordinates(P[k], P[k + 1]) for k in range(len(P) - 1)]

    def lifts(self, k):
        return self.quot[k].lifts if k < len(self.quot) else []

    def coords(self, k, v):
        if k >= len(self.quot):
            return []
        return self.quot[k].coords(v)


def _quadric_matrices(R: ArtinianAlgebra, graded: _Graded):
    """Q_k[a][b] = k-th coordinate of e_a * e_b in m^2/m^3."""
    e = graded.lifts(1)
    r = len(e)
    c = graded.quot[2].dim if len(graded.quot) > 2 else 0
    Q = [la.zeros(r, r) for _ in range(c)]
    products = {}
    for a in range(r):
        for b in range(a, r):
            w = graded.coords(2, R.multiply(e[a], e[b])) if c else []
            products[(a, b)] = w
            for k in range(c):
                Q[k][a][b] = Q[k][b][a] = w[k]
    return Q, products


def quadratic_form_data(R: ArtinianAlgebra) -> QuadraticData:
    """Invariants of the multiplication map Sym^2(m/m^2) -> m^2/m^3."""
    graded = _Graded(R)
    r = graded.quot[1].dim if len(graded.quot) > 1 else 0
    if r == 0:
        return QuadraticData(None, None, None)
    Q, products = _quadric_matrices(R, graded)
    c = len(Q)
    if c == 0:
        return QuadraticData(None, None, None)
    single = la.rank(Q[0]) if c == 1 else None
    pairs = sorted(products)
    # columns of the Sym^2 map indexed by pairs a <= b
    A = [[products[p][k] for p in pairs] for k in range(c)]
    kernel = []
    for v in la.nullspace(A, len(pairs)):
        S = la.zeros(r, r)
        for (a, b), x in zip(pairs, v):
            if a == b:
                S[a][a] = x
            else:
                S[a][b] = S[b][a] = x / 2
        kernel.append(S)
    return QuadraticData(single, system_profile(Q), system_profile(kernel) if kernel else None)


@dataclass(frozen=True)
class CubicProfile:
    """Root structure of the binary cubic (x e1 + y e2)^3 in m^3/m^4.

    ``roots`` holds (degree, multiplicity) of the square-free factors of the
    cubic; ``shared_with_quadric`` the same for its gcd with the quadric(s).
    """
    roots: tuple
    shared_with_quadric: tuple


def cubic_form_profile(R: ArtinianAlgebra) -> CubicProfile:
    chi = hilbert_samuel(R)
    if len(chi) < 4 or chi[1] != 2 or chi[3] < 1:
        raise ValueError(f"cubic profile needs chi(1) = 2 and chi(3) >= 1, got chi = {chi}")
    graded = _Graded(R)
    e1, e2 = graded.lifts(1)
    x, y = sympy.symbols("x y")
    cubes = [sympy.Integer(0)] * chi[3]
    for j, binom in enumerate((1, 3, 3, 1)):
        w = graded.coords(3, _monomial_product(R, e1, e2, 3 - j, j))
        for k, wk in enumerate(w):
            cubes[k] += binom * sympy.Rational(wk.numerator, wk.denominator) * x ** (3 - j) * y ** j
    Q, _ = _quadric_matrices(R, graded)
    quadrics = [
        sum((sympy.Rational(Qk[a][b].numerator, Qk[a][b].denominator) * s * t
             for a, s in enumerate((x, y)) for b, t in enumerate((x, y))), sympy.Integer(0))
        for Qk in Q
    ]
    c = sympy.Integer(0)
    for f in cubes:
        c = sympy.gcd(c, f)
    shared = c
    for q in quadrics:
        shared = sympy.gcd(shared, q)
    return CubicProfile(_binary_profile(c, x, y), _binary_profile(shared, x, y))


def _monomial_product(R, e1, e2, a, b):
    v = [Fraction(int(k == 0)) for k in range(R.length)]
    for _ in range(a):
        v = R.multiply(e1, v)
    for _ in range(b):
        v = R.multiply(e2, v)
    return v


def _binary_profile(f, x, y) -> tuple:
    f = sympy.expand(f)
    if f == 0:
        return (("zero", 0),)
    poly = sympy.Poly(f, x, y)
    if poly.total_degree() == 0:
        return ()
    _, factors = sympy.sqf_list(f, x, y)
    return tuple(sorted((sympy.Poly(g, x, y).total_degree(), m) for g, m in factors))


# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    arity: int
    length: int
    hilbert_samuel: tuple
    kernel_rank_profile: tuple
    quad_rank_profile: tuple
    cubic_profile: tuple
    socle_dim: int
    gorenstein: bool
    embedding_dim: int

    def as_dict(self) -> dict:
        return asdict(self)

    def differences(self, other: "Fingerprint") -> list:
        """Names of components that differ, in field order."""
        a, b = self.as_dict(), other.as_dict()
        return [k for k in a if a[k] != b[k]]


def fingerprint(R: ArtinianAlgebra) -> Fingerprint:
    chi = hilbert_samuel(R)
    q = quadratic_form_data(R)
    quad = ()
    if q.image is not None:
        quad = (q.single_form_rank, q.image.dim, q.image.generic_rank, q.image.det_profile)
    kern = ()
    if q.kernel is not None:
        kern = (q.kernel.dim, q.kernel.generic_rank, q.kernel.det_profile)
    cubic = ()
    if len(chi) > 3 and chi[1] == 2 and chi[3] >= 1:
        cp = cubic_form_profile(R)
        cubic = (cp.roots, cp.shared_with_quadric)
    sd = socle_dimension(R)
    return Fingerprint(
        arity=R.n,
        length=R.length,
        hilbert_samuel=chi,
        socle_dim=sd,
        gorenstein=sd == 1,
        embedding_dim=chi[1] if len(chi) > 1 else 0,
        quad_rank_profile=quad,
        kernel_rank_profile=kern,
        cubic_profile=cubic,
    )


def substitute_ideal(ideal: Ideal, images: list) -> Ideal:
    """Apply the substitution S_i -> images[i] to every generator."""
    powers: dict = {}
    return Ideal([g.substitute(images, powers) for g in ideal.generators], images[0].n)


def linear_substitution(A) -> list:
    """Images S_i -> sum_j A[i][j] S_j of a square matrix ``A``."""
    n = len(A)
    return [
        Polynomial({tuple(int(k == j) for k in range(n)): Fraction(A[i][j]) for j in range(n) if A[i][j]},
                   n, OPERATOR)
        for i in range(n)
    ]
