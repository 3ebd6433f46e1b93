"""Symmetric-function oracle for the unitary Adams coefficients.

The Adams operation psi^l acts on a k-fold wedge of weight lines by raising
every weight monomial to the l-th power; rewriting the result in the wedge
basis leaves, in front of the degree-p generator, a sum of monomials
lambda_1^{k_1} ... lambda_n^{k_n} over bounded compositions (0 <= k_r <= l-1,
sum = l*k - p).  This module performs that rewriting symbolically in
Z[lambda_1, ..., lambda_n] -- via elementary/complete symmetric polynomials
and the triangular conversion between them, never by enumerating
compositions -- so that it is an oracle fully independent of the `counts`
module.  Specializing every variable to 1 must reproduce mu(n, l, k, p).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Tuple

__all__ = [
    "SymPoly",
    "symmetric_basis",
    "complete_by_recursion",
    "subset_power_expansion",
    "adams_symbolic_coefficients",
    "conversion_matrices",
    "bounded_composition_poly",
    "verify_product_identity",
]

Exponents = Tuple[int, ...]


class SymPoly:
    """A multivariate polynomial over Z in variables lambda_1 .. lambda_n.

    Terms map exponent tuples (length n, nonnegative entries) to nonzero
    integer coefficients.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Exponents, int] | None = None) -> None:
        if n < 1:
            raise ValueError(f"SymPoly: need at least one variable, got n={n}")
        self.n = n
        self.terms: Dict[Exponents, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"SymPoly: bad exponent tuple {exps!r} for n={n}")
                self.terms[exps] = coeff

    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, n: int, exps: Exponents, coeff: int = 1) -> "SymPoly":
        return cls(n, {tuple(exps): coeff})

    def _check(self, other: "SymPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = out.get(exps, 0) + coeff
            if c:
                out[exps] = c
            else:
                out.pop(exps, None)
        return SymPoly(self.n, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other: "SymPoly | int") -> "SymPoly":
        if isinstance(other, int):
            return SymPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                else:
                    del out[key]
        return SymPoly(self.n, out)

    def __rmul__(self, other: int) -> "SymPoly":
        return self * other

    def truncate(self, max_degree: int) -> "SymPoly":
        """Drop every term of total degree above max_degree."""
        return SymPoly(self.n, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def substitute_power(self, l: int) -> "SymPoly":
        """Replace each variable lambda_i by lambda_i^l."""
        if l < 1:
            raise ValueError(f"substitute_power: exponent must be positive, got {l}")
        return SymPoly(self.n, {tuple(l * e for e in exps): c for exps, c in self.terms.items()})

    def permute_variables(self, perm: Tuple[int, ...]) -> "SymPoly":
        """Reindex variables: the new exponent of position i is the old one at perm[i]."""
        return SymPoly(
            self.n, {tuple(exps[p] for p in perm): c for exps, c in self.terms.items()}
        )

    def specialize_ones(self) -> int:
        """Evaluate at lambda_1 = ... = lambda_n = 1 (the sum of coefficients)."""
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymPoly) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"SymPoly(n={self.n}, terms={self.terms!r})"


def symmetric_basis(n: int, k: int, kind: str) -> SymPoly:
    """The k-th elementary (e_k) or complete homogeneous (h_k) symmetric
    polynomial in n variables, straight from the defining sum.

    e_k = 0 for k > n; e_0 = h_0 = 1.
    """
    if k < 0:
        raise ValueError(f"symmetric_basis: degree must be nonnegative, got {k}")
    if kind == "elementary":
        if k > n:
            return SymPoly.zero(n)
        picks = combinations(range(n), k)
    elif kind == "complete":
        picks = combinations_with_replacement(range(n), k)
    else:
        raise ValueError(f"symmetric_basis: kind must be 'elementary' or 'complete', got {kind!r}")
    terms: Dict[Exponents, int] = {}
    for pick in picks:
        exps = [0] * n
        for i in pick:
            exps[i] += 1
        terms[tuple(exps)] = 1
    return SymPoly(n, terms)


@lru_cache(maxsize=None)
def _elementary(n: int, k: int) -> SymPoly:
    return symmetric_basis(n, k, "elementary")


@lru_cache(maxsize=None)
def complete_by_recursion(n: int, k: int) -> SymPoly:
    """h_k computed from the elementary polynomials by the triangular
    recursion h_{i+1} = s_1 h_i - s_2 h_{i-1} + ... + (-1)^i s_{i+1},
    rather than from the defining sum over multisets."""
    if k < 0:
        raise ValueError(f"complete_by_recursion: degree must be nonnegative, got {k}")
    if k == 0:
        return SymPoly.one(n)
    acc = SymPoly.zero(n)
    for j in range(1, k + 1):
        term = _elementary(n, j) * complete_by_recursion(n, k - j)
        acc = acc + (term if j % 2 else -term)
    return acc


@lru_cache(maxsize=None)
def _elementary_power(n: int, q: int, l: int) -> SymPoly:
    # e_q evaluated on the l-th powers of the variables
    return _elementary(n, q).substitute_power(l)


def subset_power_expansion(n: int, l: int, k: int) -> tuple[SymPoly, ...]:
    """The weight-level expansion of the l-th Adams image of a k-fold wedge.

    Position i collects the coefficient of the formal class t_i: the sum of
    lambda_I^l over the k-element subsets I containing i.  Only linear
    combinations of the t_i ever occur, so a plain vector of polynomials
    suffices.
    """
    if not 1 <= k <= n:
        raise ValueError(f"subset_power_expansion: need 1 <= k <= n, got k={k}, n={n}")
    if l < 1:
        raise ValueError(f"subset_power_expansion: need l >= 1, got {l}")
    vec = [SymPoly.zero(n) for _ in range(n)]
    for pick in combinations(range(n), k):
        exps = [0] * n
        for i in pick:
            exps[i] = l
        mono = SymPoly.monomial(n, tuple(exps))
        for i in pick:
            vec[i] = vec[i] + mono
    return tuple(vec)


def adams_symbolic_coefficients(n: int, l: int, k: int) -> tuple[SymPoly, ...]:
    """For p = 1..n, the bounded-composition polynomial sitting in front of
    the degree-p wedge generator in the Adams image of the degree-k one
    (the alternating sign (-1)^{k+p} is left to the caller).

    Computed by symmetric-function algebra, not enumeration:

        B_p = sum_{q=0}^{k-1} (-1)^q e_q(lambda^l) h_{l(k-q)-p},

    with h from the triangular recursion.  Entry p of the result is at
    index p-1.
    """
    if not 1 <= k <= n:
        raise ValueError(f"adams_symbolic_coefficients: need 1 <= k <= n, got k={k}, n={n}")
    if l < 1:
        raise ValueError(f"adams_symbolic_coefficients: need l >= 1, got {l}")
    out = []
    for p in range(1, n + 1):
        acc = SymPoly.zero(n)
        for q in range(k):
            c = l * (k - q) - p
            if c < 0:
                continue
            term = _elementary_power(n, q, l) * complete_by_recursion(n, c)
            acc = acc + (-term if q % 2 else term)
        out.append(acc)
    return tuple(out)


def conversion_matrices(
    n: int, size: int
) -> tuple[list[list[SymPoly]], list[list[SymPoly]]]:
    """The lower-triangular change-of-basis matrices between the two
    symmetric-polynomial families, with alternating column signs: entry
    (i, j) of the first is (-1)^j s_{i-j}, of the second (-1)^j h_{i-j}
    (indices 0-based, subscript < 0 meaning zero).  They must multiply to
    the identity; the second is built with the recursive h so the check
    exercises both routes.
    """
    if size < 1 or n < 1:
        raise ValueError(f"conversion_matrices: need n, size >= 1, got n={n}, size={size}")
    zero = SymPoly.zero(n)
    m = [
        [
            (-1) ** j * symmetric_basis(n, i - j, "elementary") if i >= j else zero
            for j in range(size)
        ]
        for i in range(size)
    ]
    m_inv = [
        [
            (-1) ** j * complete_by_recursion(n, i - j) if i >= j else zero
            for j in range(size)
        ]
        for i in range(size)
    ]
    return m, m_inv


def bounded_composition_poly(n: int, l: int, k: int, p: int) -> SymPoly:
    """The same polynomial by brute force: sum the monomial lambda^kappa over
    every tuple kappa with 0 <= kappa_r <= l-1 and sum l*k - p."""
    if l < 1 or n < 1:
        raise ValueError(f"bounded_composition_poly: need n, l >= 1, got n={n}, l={l}")
    target = l * k - p
    terms: Dict[Exponents, int] = {}
    if 0 <= target <= n * (l - 1):
        for kappa in product(range(l), repeat=n):
            if sum(kappa) == target:
                terms[kappa] = 1
    return SymPoly(n, terms)


def _geometric(n: int, i: int, top: int) -> SymPoly:
    # 1 + lambda_i + ... + lambda_i^top
    terms: Dict[Exponents, int] = {}
    for j in range(top + 1):
        exps = [0] * n
        exps[i] = j
        terms[tuple(exps)] = 1
    return SymPoly(n, terms)


def verify_product_identity(n: int, l: int, max_degree: int) -> tuple[bool, str]:
    """Check, through total degree max_degree, that

        prod_i (1 - lambda_i^l) / prod_i (1 - lambda_i)
            = prod_i (1 + lambda_i + ... + lambda_i^{l-1}),

    expanding 1/(1 - lambda_i) as a truncated geometric series, and that for
    every 1 <= k <= n, 1 <= p <= n with l*k - p <= max_degree the symbolic
    coefficient equals the bounded-composition sum coefficientwise.

    Returns (ok, detail); detail names the first failure, if any.
    """
    if n < 1 or l < 1 or max_degree < 0:
        raise ValueError("verify_product_identity: need n, l >= 1 and max_degree >= 0")
    lhs = SymPoly.one(n)
    for i in range(n):
        exps = [0] * n
        exps[i] = l
        factor = SymPoly.one(n) - SymPoly.monomial(n, tuple(exps))
        lhs = (lhs * factor).truncate(max_degree)
    for i in range(n):
        lhs = (lhs * _geometric(n, i, max_degree)).truncate(max_degree)
    rhs = SymPoly.one(n)
    for i in range(n):
        rhs = (rhs * _geometric(n, i, l - 1)).truncate(max_degree)
    if lhs != rhs:
        return False, f"product identity fails for n={n}, l={l} through degree {max_degree}"
    for k in range(1, n + 1):
        symbolic = adams_symbolic_coefficients(n, l, k)
        for p in range(1, n + 1):
            if l * k - p > max_degree:
                continue
            if symbolic[p - 1] != bounded_composition_poly(n, l, k, p):
                return False, (
                    f"coefficient identity fails at n={n}, l={l}, k={k}, p={p}"
                )
    return True, f"n={n}, l={l}, degree<={max_degree}"
