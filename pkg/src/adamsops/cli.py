"""Command-line surface: matrices, eigenvectors, raw counts, verification.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 a verification property failed, 2 invalid arguments, 3 an internal
consistency assertion failed (independent computation routes disagreed, or
an entry that must be an integer was not).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterable, Sequence

from .counts import beta, mu_closed, mu_enumerate
from .eigen import (
    eigenbasis_determinant,
    eigenvector,
    sinh_pow_coeff_poly,
    spectrum_check,
    verify_eigen_relation,
)
from .exactmath import binomial, t_over_sinh_pow
from .ktheory import (
    FAMILIES,
    AdamsMatrix,
    ConsistencyError,
    GroupSpec,
    adams_matrix,
    basis,
)
from .symoracle import (
    adams_symbolic_coefficients,
    complete_by_recursion,
    conversion_matrices,
    subset_power_expansion,
    symmetric_basis,
    SymPoly,
    verify_product_identity,
)

__all__ = [
    "main",
    "CheckResult",
    "counts_suite",
    "matrices_suite",
    "eigen_suite",
    "oracle_suite",
]


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _result(name: str, counterexample: str | None, swept: str) -> CheckResult:
    if counterexample is None:
        return CheckResult(name, True, swept)
    return CheckResult(name, False, counterexample)


def counts_suite(max_rank: int = 8, max_l: int = 6) -> list[CheckResult]:
    results = []

    def closed_vs_enumerated() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                for k in range(n + 1):
                    for p in range(l * n + 1):
                        if mu_closed(n, l, k, p) != mu_enumerate(n, l, k, p):
                            return f"n={n}, l={l}, k={k}, p={p}"
        return None

    results.append(
        _result(
            "count: closed form equals enumeration",
            closed_vs_enumerated(),
            f"n<={max_rank}, l<={max_l}, 0<=k<=n, 0<=p<=l*n",
        )
    )

    def duality() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                for k in range(n + 1):
                    for p in range(l * n + 1):
                        if mu_closed(n, l, k, p) != mu_closed(n, l, n - k, n - p):
                            return f"n={n}, l={l}, k={k}, p={p}"
        return None

    results.append(
        _result(
            "count: duality under (k, p) -> (n-k, n-p)",
            duality(),
            f"n<={max_rank}, l<={max_l}",
        )
    )

    def multiplicativity() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                for m in range(1, max_l + 1):
                    for k in range(1, n + 1):
                        for q in range(1, n + 1):
                            lhs = sum(
                                mu_closed(n, l, k, p) * mu_closed(n, m, p, q)
                                for p in range(1, n + 1)
                            )
                            if lhs != mu_closed(n, m * l, k, q):
                                return f"n={n}, l={l}, m={m}, k={k}, q={q}"
        return None

    results.append(
        _result(
            "count: composition convolution",
            multiplicativity(),
            f"n<={max_rank}, l,m<={max_l}, 1<=k,q<=n",
        )
    )

    def square_case() -> str | None:
        top = max(10, max_rank)
        for n in range(1, top + 1):
            for k in range(n + 1):
                for p in range(2 * n + 1):
                    if mu_closed(n, 2, k, p) != binomial(n, 2 * k - p):
                        return f"n={n}, k={k}, p={p}"
        return None

    results.append(
        _result(
            "count: l=2 collapses to a single binomial",
            square_case(),
            f"n<={max(10, max_rank)}, 0<=k<=n, 0<=p<=2n",
        )
    )

    def antisymmetry() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                for k in range(n + 1):
                    for p in range(n + 1):
                        if beta(n, l, k, p) != -beta(n, l, k, n - p):
                            return f"n={n}, l={l}, k={k}, p={p}"
        return None

    results.append(
        _result(
            "count: difference is antisymmetric in p -> n-p",
            antisymmetry(),
            f"n<={max_rank}, l<={max_l}",
        )
    )
    return results


def _matrix_groups(max_rank: int, reducible_only: bool = False) -> list[GroupSpec]:
    groups: list[GroupSpec] = []
    if not reducible_only:
        groups += [GroupSpec("U", n) for n in range(1, max_rank + 1)]
        groups += [GroupSpec("SU", n) for n in range(2, max_rank + 1)]
    groups += [GroupSpec("Sp", n) for n in range(1, max_rank + 1)]
    groups += [GroupSpec("SpinOdd", n) for n in range(1, max_rank + 1)]
    groups += [GroupSpec("SpinEven", n) for n in range(3, max_rank + 1)]
    groups.append(GroupSpec("G2"))
    return groups


def matrices_suite(max_rank: int = 5, max_l: int = 4) -> list[CheckResult]:
    results = []

    def closed_vs_pipeline() -> str | None:
        for group in _matrix_groups(max_rank, reducible_only=True):
            for l in range(1, max_l + 1):
                try:
                    adams_matrix(group, l, cross_check=True)
                except ConsistencyError as exc:
                    return f"{group}, l={l}: {exc}"
        return None

    results.append(
        _result(
            "matrix: closed forms equal the functoriality pipeline",
            closed_vs_pipeline(),
            f"Sp/SpinOdd/SpinEven/G2, rank<={max_rank}, l<={max_l}",
        )
    )

    def composition() -> str | None:
        for group in _matrix_groups(max_rank):
            for l in range(1, max_l + 1):
                for m in range(1, max_l + 1):
                    left = adams_matrix(group, m, cross_check=False).compose(
                        adams_matrix(group, l, cross_check=False)
                    )
                    direct = adams_matrix(group, m * l, cross_check=False)
                    if left.entries != direct.entries:
                        return f"{group}, l={l}, m={m}"
        return None

    results.append(
        _result(
            "matrix: composition M(m).M(l) = M(m*l)",
            composition(),
            f"all families, rank<={max_rank}, l,m<={max_l}",
        )
    )

    def identity() -> str | None:
        for group in _matrix_groups(max_rank):
            if not adams_matrix(group, 1, cross_check=False).is_identity():
                return str(group)
        return None

    results.append(
        _result("matrix: l=1 gives the identity", identity(), f"all families, rank<={max_rank}")
    )

    def integrality() -> str | None:
        # re-assembly raises ConsistencyError on any fractional entry
        try:
            for group in _matrix_groups(max_rank):
                for l in range(1, max_l + 1):
                    adams_matrix(group, l, cross_check=False)
        except ConsistencyError as exc:
            return str(exc)
        return None

    results.append(
        _result(
            "matrix: every entry is an integer",
            integrality(),
            f"all families, rank<={max_rank}, l<={max_l}",
        )
    )
    return results


def eigen_suite(max_rank: int = 8, levels: Iterable[int] = (2, 3, 5)) -> list[CheckResult]:
    levels = tuple(levels)
    results = []

    def relation() -> str | None:
        for n in range(1, max_rank + 1):
            for l in levels:
                for k, ok in verify_eigen_relation(n, l):
                    if not ok:
                        return f"n={n}, l={l}, k={k}"
        return None

    results.append(
        _result(
            "eigen: closed-form vectors are eigenvectors",
            relation(),
            f"n<={max_rank}, l in {levels}, all levels",
        )
    )

    def independence() -> str | None:
        for n in range(1, max_rank + 1):
            if eigenbasis_determinant(n) == 0:
                return f"n={n}"
        return None

    results.append(
        _result(
            "eigen: the n vectors are linearly independent",
            independence(),
            f"n<={max_rank}",
        )
    )

    def recurrence_vs_series() -> str | None:
        series = {y: t_over_sinh_pow(y, 22) for y in range(11)}
        for j in range(11):
            poly = sinh_pow_coeff_poly(j)
            if poly.degree != j:
                return f"degree of coefficient polynomial {j} is {poly.degree}"
            for y in range(11):
                if poly(y) != series[y].coefficient(2 * j):
                    return f"j={j}, y={y}"
        return None

    results.append(
        _result(
            "eigen: recurrence matches the series expansion",
            recurrence_vs_series(),
            "y<=10, j<=10, degrees exact",
        )
    )

    def spectrum() -> str | None:
        for group in _matrix_groups(min(max_rank, 6)):
            for l in levels:
                report = spectrum_check(group, l)
                if not report.ok:
                    return f"{group}, l={l}: {report.char_coeffs} != {report.expected_coeffs}"
        return None

    results.append(
        _result(
            "eigen: characteristic polynomial matches the exponents",
            spectrum(),
            f"all families, rank<={min(max_rank, 6)}, l in {levels}",
        )
    )
    return results


def oracle_suite(max_rank: int = 5, max_l: int = 4, max_degree: int = 12) -> list[CheckResult]:
    results = []

    def specialization() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                for k in range(1, n + 1):
                    coeffs = adams_symbolic_coefficients(n, l, k)
                    for p in range(1, n + 1):
                        if coeffs[p - 1].specialize_ones() != mu_closed(n, l, k, p):
                            return f"n={n}, l={l}, k={k}, p={p}"
        return None

    results.append(
        _result(
            "oracle: specializing the symbolic coefficients at 1 gives the counts",
            specialization(),
            f"n<={max_rank}, l<={max_l}, 1<=k,p<=n",
        )
    )

    def identities() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                ok, detail = verify_product_identity(n, l, max_degree)
                if not ok:
                    return detail
        return None

    results.append(
        _result(
            "oracle: geometric product and coefficient identities",
            identities(),
            f"n<={max_rank}, l<={max_l}, degree<={max_degree}",
        )
    )

    def conversion() -> str | None:
        n_vars = min(max_rank, 4)
        for size in range(1, 7):
            m, m_inv = conversion_matrices(n_vars, size)
            for i in range(size):
                for j in range(size):
                    prod = SymPoly.zero(n_vars)
                    for r in range(size):
                        prod = prod + m[i][r] * m_inv[r][j]
                    want = SymPoly.one(n_vars) if i == j else SymPoly.zero(n_vars)
                    if prod != want:
                        return f"size={size}, entry ({i}, {j})"
        return None

    results.append(
        _result(
            "oracle: triangular conversion matrices are mutually inverse",
            conversion(),
            "sizes <= 6",
        )
    )

    def h_recursion() -> str | None:
        for n in range(1, max_rank + 1):
            for c in range(0, 9):
                if complete_by_recursion(n, c) != symmetric_basis(n, c, "complete"):
                    return f"n={n}, degree={c}"
        return None

    results.append(
        _result(
            "oracle: recursive complete symmetric polynomials match the definition",
            h_recursion(),
            f"n<={max_rank}, degree<=8",
        )
    )

    def weight_expansion() -> str | None:
        for n in range(1, max_rank + 1):
            for l in range(1, max_l + 1):
                for k in range(1, n + 1):
                    vec = subset_power_expansion(n, l, k)
                    for i in range(n):
                        expected = SymPoly.zero(n)
                        for j in range(1, k + 1):
                            exps = [0] * n
                            exps[i] = l * j
                            term = symmetric_basis(n, k - j, "elementary").substitute_power(
                                l
                            ) * SymPoly.monomial(n, tuple(exps))
                            expected = expected + (-term if j % 2 == 0 else term)
                        if vec[i] != expected:
                            return f"n={n}, l={l}, k={k}, i={i}"
        return None

    results.append(
        _result(
            "oracle: subset expansion equals its alternating rewriting",
            weight_expansion(),
            f"n<={max_rank}, l<={max_l}, 1<=k<=n",
        )
    )

    def symmetry() -> str | None:
        for n in range(2, max_rank + 1):
            swap = (1, 0) + tuple(range(2, n))
            cycle = tuple(range(1, n)) + (0,)
            for l in range(1, max_l + 1):
                for k in range(1, n + 1):
                    for poly in adams_symbolic_coefficients(n, l, k):
                        if poly.permute_variables(swap) != poly:
                            return f"n={n}, l={l}, k={k} (transposition)"
                        if poly.permute_variables(cycle) != poly:
                            return f"n={n}, l={l}, k={k} (cycle)"
        return None

    results.append(
        _result(
            "oracle: symbolic coefficients are symmetric in the variables",
            symmetry(),
            f"n<={max_rank}, l<={max_l}",
        )
    )
    return results


# ---------------------------------------------------------------------------
# commands


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _group_from_args(family: str, rank: int | None) -> GroupSpec:
    if family == "G2":
        return GroupSpec("G2")
    if rank is None:
        raise ValueError(f"--rank is required for family {family}")
    return GroupSpec(family, rank)


def _matrix_document(mat: AdamsMatrix) -> dict:
    return {
        "group": mat.group.family,
        "rank": mat.group.n,
        "l": mat.l,
        "basis": [b.label for b in mat.basis],
        "matrix": [[str(e) for e in row] for row in mat.entries],
    }


def _print_pretty_matrix(mat: AdamsMatrix) -> None:
    labels = [b.label for b in mat.basis]
    width = max(
        max((len(str(e)) for row in mat.entries for e in row), default=1),
        max(len(s) for s in labels),
    )
    print(f"psi^{mat.l} on {mat.group}  (columns are images of basis elements)")
    header = " " * (width + 2) + "  ".join(s.rjust(width) for s in labels)
    print(header)
    for label, row in zip(labels, mat.entries):
        cells = "  ".join(str(e).rjust(width) for e in row)
        print(f"{label.rjust(width)}  {cells}")


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        group = _group_from_args(args.group, args.rank)
        mat = adams_matrix(group, args.l)
    except ValueError as exc:
        _fail(str(exc))
        return 2
    except ConsistencyError as exc:
        _fail(f"internal consistency failure: {exc}")
        return 3
    if args.format == "json":
        print(json.dumps(_matrix_document(mat), indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow([b.label for b in mat.basis])
        for row in mat.entries:
            writer.writerow([str(e) for e in row])
    else:
        _print_pretty_matrix(mat)
    return 0


def cmd_eigen(args: argparse.Namespace) -> int:
    try:
        if args.rank < 1:
            raise ValueError(f"rank must be positive, got {args.rank}")
        group = GroupSpec("U", args.rank)
        vectors = [eigenvector(args.rank, k) for k in range(args.rank)]
        mat = adams_matrix(group, args.l) if args.l is not None else None
    except ValueError as exc:
        _fail(str(exc))
        return 2
    n = args.rank
    labels = [b.label for b in basis(group)]
    levels = list(range(n))
    coord_rows = [v.coords for v in vectors]
    if args.integral:
        # display variant: scale each vector by the lcm of its denominators
        # (any nonzero multiple of an eigenvector is an eigenvector)
        coord_rows = [
            tuple(c * lcm(*(x.denominator for x in coords)) for c in coords)
            for coords in coord_rows
        ]
    if args.l is None:
        eigenvalues = [f"l^{n - k}" for k in levels]
    else:
        eigenvalues = [str(args.l ** (n - k)) for k in levels]
    doc: dict = {"group": "U", "rank": n}
    if mat is not None:
        doc["l"] = mat.l
    doc["basis"] = labels
    if mat is not None:
        doc["matrix"] = [[str(e) for e in row] for row in mat.entries]
    doc["eigen"] = {
        "levels": levels,
        "eigenvalues": eigenvalues,
        "vectors": [[str(c) for c in coords] for coords in coord_rows],
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["level", "eigenvalue"] + labels)
        for k, coords in zip(levels, coord_rows):
            writer.writerow([k, eigenvalues[k]] + [str(c) for c in coords])
    else:
        print(f"eigenvectors of the Adams operations on U({n})")
        for k, coords in zip(levels, coord_rows):
            joined = ", ".join(str(c) for c in coords)
            print(f"  level {k}  eigenvalue {eigenvalues[k]}  ({joined})")
    return 0


def cmd_mu(args: argparse.Namespace) -> int:
    try:
        value = mu_closed(args.n, args.l, args.k, args.p)
    except ValueError as exc:
        _fail(str(exc))
        return 2
    if args.check:
        brute = mu_enumerate(args.n, args.l, args.k, args.p)
        if brute != value:
            _fail(
                f"closed form {value} disagrees with enumeration {brute} "
                f"at n={args.n}, l={args.l}, k={args.k}, p={args.p}"
            )
            return 3
    print(value)
    return 0


_SUITES: dict[str, Callable[[argparse.Namespace], list[CheckResult]]] = {}


def _run_counts(args: argparse.Namespace) -> list[CheckResult]:
    return counts_suite(args.max_rank or 8, args.max_l or 6)


def _run_matrices(args: argparse.Namespace) -> list[CheckResult]:
    return matrices_suite(args.max_rank or 5, args.max_l or 4)


def _run_eigen(args: argparse.Namespace) -> list[CheckResult]:
    levels = (2, 3, 5) if args.max_l is None else tuple(range(2, args.max_l + 1))
    return eigen_suite(args.max_rank or 8, levels)


def _run_oracle(args: argparse.Namespace) -> list[CheckResult]:
    return oracle_suite(args.max_rank or 5, args.max_l or 4)


_SUITES.update(
    {
        "counts": _run_counts,
        "matrices": _run_matrices,
        "eigen": _run_eigen,
        "oracle": _run_oracle,
    }
)


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    all_results: list[CheckResult] = []
    for name in names:
        all_results.extend(_SUITES[name](args))
    for r in all_results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name}  [{r.detail}]")
    failed = sum(1 for r in all_results if not r.ok)
    print(f"{len(all_results) - failed}/{len(all_results)} checks passed")
    return 1 if failed else 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adamsops",
        description=(
            "Exact Adams-operation matrices on the primitive K-theory "
            "generators of the compact classical Lie groups and G2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="assemble the psi^l matrix for a group")
    p_compute.add_argument("--group", required=True, choices=FAMILIES)
    p_compute.add_argument("--rank", type=int, help="rank parameter n (ignored for G2)")
    p_compute.add_argument("--l", type=int, required=True, help="Adams operation index, l >= 1")
    p_compute.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_compute.set_defaults(func=cmd_compute)

    p_eigen = sub.add_parser("eigen", help="closed-form eigenvectors for U(rank)")
    p_eigen.add_argument("--rank", type=int, required=True)
    p_eigen.add_argument(
        "--l", type=int, help="attach concrete eigenvalues (and the matrix) for this l"
    )
    p_eigen.add_argument(
        "--integral",
        action="store_true",
        help="scale each vector to integer coordinates (display only)",
    )
    p_eigen.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_eigen.set_defaults(func=cmd_eigen)

    p_mu = sub.add_parser("mu", help="a single bounded-composition count")
    p_mu.add_argument("n", type=int)
    p_mu.add_argument("l", type=int)
    p_mu.add_argument("k", type=int)
    p_mu.add_argument("p", type=int)
    p_mu.add_argument(
        "--check", action="store_true", help="cross-check against the enumeration oracle"
    )
    p_mu.set_defaults(func=cmd_mu)

    p_verify = sub.add_parser("verify", help="run the invariant sweeps")
    p_verify.add_argument(
        "--suite", choices=("all", "counts", "matrices", "eigen", "oracle"), default="all"
    )
    p_verify.add_argument("--max-rank", type=int, dest="max_rank")
    p_verify.add_argument(
        "--max-l",
        type=int,
        dest="max_l",
        help="bound for l (for the eigen suite: use l = 2..max-l instead of 2, 3, 5)",
    )
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
