"""Eigen-structure of the Adams operations.

The unitary matrix for psi^l has simple spectrum l^n, l^(n-1), ..., l and a
basis of common eigenvectors independent of l.  The eigenvector for the
eigenvalue l^(n-k) is written in closed form through the polynomials
produced by the even Taylor coefficients of (t/sinh t)^y: coefficient j is a
degree-j polynomial in y satisfying a Bernoulli-number recurrence.  This
module computes those polynomials, the eigenvectors, and exact
characteristic-polynomial (spectrum) checks for every supported family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Sequence

from .exactmath import UniPoly, bernoulli_even
from .ktheory import GroupSpec, adams_matrix, unitary_adams_matrix

__all__ = [
    "sinh_pow_coeff_poly",
    "Eigenvector",
    "eigenvector",
    "verify_eigen_relation",
    "eigenbasis_determinant",
    "char_poly",
    "family_exponents",
    "expected_char_poly",
    "SpectrumReport",
    "spectrum_check",
]


@lru_cache(maxsize=None)
def sinh_pow_coeff_poly(j: int) -> UniPoly:
    """The coefficient of t^(2j) in (t/sinh t)^y, as a polynomial in y.

    Defined by the recurrence

        q_0(y) = 1,
        q_j(y) = -(y / 2j) * sum_{k=1}^{j} (2^(2k) B_{2k} / (2k)!) q_{j-k}(y),

    with B_{2k} the Bernoulli numbers; q_j has degree exactly j.
    """
    if j < 0:
        raise ValueError(f"coefficient index must be nonnegative, got {j}")
    if j == 0:
        return UniPoly((1,))
    acc = UniPoly()
    for k in range(1, j + 1):
        c = Fraction(2 ** (2 * k), factorial(2 * k)) * bernoulli_even(2 * k)
        acc = acc + sinh_pow_coeff_poly(j - k) * c
    return UniPoly((0, Fraction(-1, 2 * j))) * acc


@dataclass(frozen=True)
class Eigenvector:
    """The closed-form eigenvector of the U(n) Adams matrices at level k;
    its eigenvalue under psi^l is l^(n-k) for every l >= 1 simultaneously."""

    n: int
    k: int
    coords: tuple[Fraction, ...]

    @property
    def eigenvalue_exponent(self) -> int:
        return self.n - self.k


def eigenvector(n: int, k: int) -> Eigenvector:
    """Coordinate i (over the wedge basis of U(n), i = 1..n) is

        (-1)^(i-1) * sum_{j=0}^{floor(k/2)} q_j(n) / (k-2j)! * (n-2i)^(k-2j),

    with q_j the sinh-power coefficient polynomials and 0^0 = 1.
    """
    if n < 1:
        raise ValueError(f"rank must be positive, got n={n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"level must satisfy 0 <= k <= n-1, got k={k}, n={n}")
    coords = []
    for i in range(1, n + 1):
        s = Fraction(0)
        for j in range(k // 2 + 1):
            s += (
                sinh_pow_coeff_poly(j)(Fraction(n))
                / factorial(k - 2 * j)
                * (n - 2 * i) ** (k - 2 * j)
            )
        coords.append(-s if (i - 1) % 2 else s)
    return Eigenvector(n, k, tuple(coords))


def verify_eigen_relation(n: int, l: int) -> tuple[tuple[int, bool], ...]:
    """For each level k = 0..n-1, whether the U(n) matrix maps the level-k
    eigenvector to l^(n-k) times itself, exactly."""
    mat = unitary_adams_matrix(n, l)
    results = []
    for k in range(n):
        v = eigenvector(n, k)
        image = mat.apply(v.coords)
        expected = tuple(Fraction(l ** (n - k)) * c for c in v.coords)
        results.append((k, image == expected))
    return tuple(results)


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    d = len(rows)
    if d == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for i in range(d - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, d) if m[r][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, d):
            for c in range(i + 1, d):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[d - 1][d - 1]


def eigenbasis_determinant(n: int) -> Fraction:
    """Determinant of the matrix whose rows are the n eigenvectors of U(n);
    nonzero means the closed-form vectors are linearly independent."""
    rows = []
    scale = Fraction(1)
    for k in range(n):
        coords = eigenvector(n, k).coords
        mult = lcm(*(c.denominator for c in coords)) if coords else 1
        rows.append([int(c * mult) for c in coords])
        scale *= mult
    return Fraction(_bareiss_det(rows)) / scale


def char_poly(entries: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of det(x*I - M) for an integer
    matrix, via fraction-free determinants at x = 0..dim and exact
    Lagrange interpolation."""
    d = len(entries)
    xs = list(range(d + 1))
    ys = []
    for x in xs:
        shifted = [
            [(x if i == j else 0) - entries[i][j] for j in range(d)] for i in range(d)
        ]
        ys.append(_bareiss_det(shifted))
    poly = UniPoly()
    for i, xi in enumerate(xs):
        num = UniPoly((1,))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = num * UniPoly((-xj, 1))
                denom *= xi - xj
        poly = poly + num * (Fraction(ys[i]) / denom)
    coeffs = list(poly.coeffs) + [Fraction(0)] * (d + 1 - len(poly.coeffs))
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError(f"interpolation produced a non-integer coefficient {c}")
        out.append(int(c))
    return tuple(out)


def family_exponents(group: GroupSpec) -> tuple[int, ...]:
    """The exponents m_i of the group; the psi^l eigenvalues are l^(m_i + 1).

    U(n): 0..n-1; SU(n): 1..n-1; Sp(n) and Spin(2n+1): 1, 3, ..., 2n-1;
    Spin(2n): 1, 3, ..., 2n-3 together with n-1; G2: 1, 5.
    """
    f, n = group.family, group.n
    if f == "U":
        return tuple(range(n))
    if f == "SU":
        return tuple(range(1, n))
    if f in ("Sp", "SpinOdd"):
        return tuple(range(1, 2 * n, 2))
    if f == "SpinEven":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    return (1, 5)


def expected_char_poly(group: GroupSpec, l: int) -> tuple[int, ...]:
    """Coefficients of prod_i (x - l^(m_i + 1))."""
    poly = UniPoly((1,))
    for m in family_exponents(group):
        poly = poly * UniPoly((-(l ** (m + 1)), 1))
    return tuple(int(c) for c in poly.coeffs)


@dataclass(frozen=True)
class SpectrumReport:
    group: GroupSpec
    l: int
    ok: bool
    eigenvalues: tuple[int, ...]
    char_coeffs: tuple[int, ...]
    expected_coeffs: tuple[int, ...]


def spectrum_check(group: GroupSpec, l: int) -> SpectrumReport:
    """Compare the characteristic polynomial of the group's psi^l matrix
    with the product of (x - l^(m_i + 1)) over the family exponents."""
    mat = adams_matrix(group, l)
    got = char_poly(mat.entries)
    want = expected_char_poly(group, l)
    eigenvalues = tuple(sorted(l ** (m + 1) for m in family_exponents(group)))
    return SpectrumReport(group, l, got == want, eigenvalues, got, want)
