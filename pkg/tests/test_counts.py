import pytest

from adamsops.counts import alpha, beta, mu_closed, mu_enumerate
from adamsops.exactmath import binomial


def test_known_values():
    assert mu_enumerate(3, 2, 1, 1) == 3
    assert mu_closed(3, 2, 1, 1) == 3
    assert mu_closed(4, 2, 1, 2) == 1
    assert mu_closed(4, 2, 2, 2) == 6
    assert mu_closed(5, 2, 2, 1) == 10
    assert mu_closed(2, 3, 1, 1) == 3  # (0,2), (1,1), (2,0)
    assert mu_closed(2, 3, 2, 2) == 1  # only (2,2) reaches sum 4


def test_p_zero_and_degenerate_edges():
    # p = 0 only counts the all-zero tuple, and only when k = 0
    assert mu_closed(3, 2, 1, 0) == 3
    assert mu_enumerate(3, 2, 1, 0) == 3
    for n in range(1, 6):
        for l in range(1, 5):
            assert mu_closed(n, l, 0, 0) == 1
            for p in range(1, l * n + 1):
                assert mu_closed(n, l, 0, p) == 0
            # the all-(l-1) tuple is the unique one of maximal sum
            assert mu_closed(n, l, n, n) == 1


def test_l_equals_one_is_kronecker_delta():
    for n in range(1, 7):
        for k in range(n + 1):
            for p in range(n + 1):
                assert mu_closed(n, 1, k, p) == (1 if p == k else 0)


def test_out_of_range_sum_is_zero():
    assert mu_closed(3, 2, 3, 1) == 0  # sum 5 > 3*(2-1)
    assert mu_closed(3, 2, 1, 3) == 0  # sum -1 < 0
    assert mu_enumerate(3, 2, 3, 1) == 0
    assert mu_enumerate(3, 2, 1, 3) == 0


def test_argument_validation():
    for bad in [(0, 2, 1, 1), (3, 0, 1, 1), (3, 2, -1, 1)]:
        with pytest.raises(ValueError):
            mu_closed(*bad)
        with pytest.raises(ValueError):
            mu_enumerate(*bad)


def test_closed_matches_enumeration_small():
    for n in range(1, 7):
        for l in range(1, 6):
            for k in range(n + 1):
                for p in range(l * n + 1):
                    assert mu_closed(n, l, k, p) == mu_enumerate(n, l, k, p)


def test_duality():
    for n in range(1, 7):
        for l in range(1, 5):
            for k in range(n + 1):
                for p in range(l * n + 1):
                    assert mu_closed(n, l, k, p) == mu_closed(n, l, n - k, n - p)


def test_square_is_single_binomial():
    for n in range(1, 11):
        for k in range(n + 1):
            for p in range(2 * n + 1):
                assert mu_closed(n, 2, k, p) == binomial(n, 2 * k - p)


def test_composition_convolution():
    # chaining an l-th and an m-th operation matches the (l*m)-th one
    for n in range(1, 6):
        for l in range(1, 4):
            for m in range(1, 4):
                for k in range(1, n + 1):
                    for q in range(1, n + 1):
                        lhs = sum(
                            mu_closed(n, l, k, p) * mu_closed(n, m, p, q)
                            for p in range(1, n + 1)
                        )
                        assert lhs == mu_closed(n, m * l, k, q)


def test_alpha_beta_values():
    assert alpha(4, 2, 1, 1) == 4
    assert alpha(4, 2, 2, 1) == 8
    assert alpha(6, 2, 1, 1) == 6
    assert alpha(2, 1, 1, 1) == 2  # p = n - p, both halves count the same tuple
    assert beta(3, 2, 1, 1) == 2
    assert beta(3, 5, 1, 1) == 5
    assert beta(4, 3, 1, 2) == 0  # p = n - p forces antisymmetric difference to 0
    assert beta(5, 2, 1, 1) == 5
    assert beta(5, 2, 1, 2) == 1
    assert beta(5, 2, 2, 1) == 9
    assert beta(5, 2, 2, 2) == 5


def test_alpha_symmetric_beta_antisymmetric():
    for n in range(1, 8):
        for l in range(1, 5):
            for k in range(n + 1):
                for p in range(n + 1):
                    assert alpha(n, l, k, p) == alpha(n, l, k, n - p)
                    assert beta(n, l, k, p) == -beta(n, l, k, n - p)


def test_row_sum_counts_every_tuple():
    # summing over every achievable p (sum = l*k - p spans 0 .. n*(l-1))
    # recovers l^n, the total number of tuples
    for n in range(1, 6):
        for l in range(1, 5):
            for k in range(n + 1):
                lo, hi = l * k - n * (l - 1), l * k
                total = sum(mu_closed(n, l, k, p) for p in range(lo - 1, hi + 2))
                assert total == l**n
