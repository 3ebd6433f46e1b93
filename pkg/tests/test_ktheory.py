"""Matrix assembly for every supported family.

The expected matrices below were produced by the independent routes --
bounded-composition enumeration for the unitary family, the wedge-power
functoriality pipeline for everything else -- and then frozen, so these
tests pin both routes at once.
"""

import pytest

from adamsops.ktheory import (
    FAMILIES,
    ConsistencyError,
    GroupSpec,
    adams_matrix,
    basis,
    defining_dimension,
    g2_adams_matrix,
    pullback_adams_matrix,
    reduction_table,
    special_unitary_adams_matrix,
    spin_even_adams_matrix,
    spin_odd_adams_matrix,
    symplectic_adams_matrix,
    unitary_adams_matrix,
)

# (family, rank, l) -> row-major entries, frozen from the oracle routes
FROZEN = {
    ("U", 2, 2): ((4, 0), (-2, 2)),
    ("U", 2, 3): ((9, 0), (-6, 3)),
    ("U", 3, 2): ((6, -2, 0), (-2, 6, 0), (0, -6, 2)),
    ("U", 4, 2): ((8, -8, 0, 0), (-2, 12, -2, 0), (0, -8, 8, 0), (0, 2, -12, 2)),
    ("SU", 3, 2): ((6, -2), (-2, 6)),
    ("SU", 4, 2): ((8, -8, 0), (-2, 12, -2), (0, -8, 8)),
    ("Sp", 1, 3): ((9,),),
    ("Sp", 2, 2): ((8, -16), (-2, 12)),
    ("Sp", 2, 3): ((33, -96), (-12, 57)),
    ("Sp", 3, 2): ((12, -40, 24), (-2, 32, -60), (0, -12, 40)),
    ("SpinOdd", 1, 2): ((4,),),
    ("SpinOdd", 2, 2): ((12, -2), (-16, 8)),
    ("SpinOdd", 2, 3): ((57, -12), (-96, 33)),
    ("SpinOdd", 3, 2): ((14, -58, -2), (-2, 54, -2), (0, -192, 16)),
    ("SpinEven", 3, 2): ((12, -2, -2), (-8, 8, 0), (-8, 0, 8)),
    ("SpinEven", 3, 3): ((57, -12, -12), (-48, 30, 3), (-48, 3, 30)),
    ("SpinEven", 4, 2): ((16, -96, 0, 0), (-2, 52, -2, -2), (0, -96, 16, 0), (0, -96, 0, 16)),
    ("G2", 2, 2): ((12, -208), (-2, 56)),
    ("G2", 2, 3): ((105, -2496), (-24, 633)),
}


@pytest.mark.parametrize("family, rank, l", sorted(FROZEN))
def test_frozen_matrices(family, rank, l):
    mat = adams_matrix(GroupSpec(family, rank), l)
    assert mat.entries == FROZEN[(family, rank, l)]


def test_columns_are_images():
    mat = adams_matrix(GroupSpec("U", 2), 2)
    # psi^2 sends the first generator to 4x(first) - 2x(second)
    assert mat.column(0) == (4, -2)
    assert mat.column(1) == (0, 2)
    assert mat.apply((1, 0)) == (4, -2)
    assert mat.apply((0, 1)) == (0, 2)


def test_rank_one_coincidences():
    # Sp(1), Spin(3) and SU(2) are the same group; all three give (l^2)
    for l in (2, 3, 5, 7):
        expected = ((l * l,),)
        assert symplectic_adams_matrix(1, l).entries == expected
        assert spin_odd_adams_matrix(1, l).entries == expected
        assert special_unitary_adams_matrix(2, l).entries == expected


def test_special_unitary_is_the_unitary_block():
    for n in (2, 3, 4, 5):
        for l in (2, 3):
            u = unitary_adams_matrix(n, l).entries
            su = special_unitary_adams_matrix(n, l).entries
            assert su == tuple(row[: n - 1] for row in u[: n - 1])


def test_basis_labels():
    assert [b.label for b in basis(GroupSpec("U", 2))] == ["d(L^1 s_2)", "d(L^2 s_2)"]
    assert [b.label for b in basis(GroupSpec("SU", 4))] == [
        "d(L^1 s_4)",
        "d(L^2 s_4)",
        "d(L^3 s_4)",
    ]
    assert [b.label for b in basis(GroupSpec("Sp", 2))] == ["d(L^1 s_4)", "d(L^2 s_4)"]
    assert [b.label for b in basis(GroupSpec("SpinOdd", 2))] == ["d(L^1 s_5)", "d(S)"]
    assert [b.label for b in basis(GroupSpec("SpinEven", 4))] == [
        "d(L^1 s_8)",
        "d(L^2 s_8)",
        "d(S+)",
        "d(S-)",
    ]
    assert [b.label for b in basis(GroupSpec("G2", 2))] == ["d(rho1)", "d(rho2)"]


def test_defining_dimensions():
    assert defining_dimension(GroupSpec("U", 3)) == 3
    assert defining_dimension(GroupSpec("SU", 3)) == 3
    assert defining_dimension(GroupSpec("Sp", 3)) == 6
    assert defining_dimension(GroupSpec("SpinOdd", 3)) == 7
    assert defining_dimension(GroupSpec("SpinEven", 4)) == 8
    assert defining_dimension(GroupSpec("G2")) == 7


def test_group_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec("SO", 3)
    with pytest.raises(ValueError):
        GroupSpec("U", 0)
    with pytest.raises(ValueError):
        GroupSpec("SU", 1)
    with pytest.raises(ValueError):
        GroupSpec("SpinEven", 2)
    assert GroupSpec("G2", 7).n == 2  # rank is pinned for the exceptional group
    assert str(GroupSpec("SpinOdd", 3)) == "Spin(7)"
    assert str(GroupSpec("SpinEven", 4)) == "Spin(8)"


def test_l_validation():
    for fam, n in [("U", 2), ("Sp", 2), ("SpinEven", 3), ("G2", 2)]:
        with pytest.raises(ValueError):
            adams_matrix(GroupSpec(fam, n), 0)
        with pytest.raises(ValueError):
            adams_matrix(GroupSpec(fam, n), -3)


@pytest.mark.parametrize("family, rank", [
    ("U", 1), ("U", 4), ("SU", 2), ("SU", 5), ("Sp", 1), ("Sp", 3),
    ("SpinOdd", 1), ("SpinOdd", 4), ("SpinEven", 3), ("SpinEven", 5), ("G2", 2),
])
def test_identity_at_l_one(family, rank):
    assert adams_matrix(GroupSpec(family, rank), 1).is_identity()


def test_composition_is_multiplicativity():
    for family, rank in [("U", 3), ("Sp", 2), ("SpinOdd", 2), ("SpinEven", 3), ("G2", 2)]:
        g = GroupSpec(family, rank)
        m2 = adams_matrix(g, 2)
        m3 = adams_matrix(g, 3)
        m6 = adams_matrix(g, 6)
        composed = m3.compose(m2)
        assert composed.l == 6
        assert composed.entries == m6.entries
        assert m2.compose(m3).entries == m6.entries  # the operations commute


def test_compose_rejects_mismatched_groups():
    a = adams_matrix(GroupSpec("Sp", 2), 2)
    b = adams_matrix(GroupSpec("SpinOdd", 2), 2)
    with pytest.raises(ValueError):
        a.compose(b)


# ---------------------------------------------------------------------------
# reduction tables and the pipeline route


def test_reduction_table_symplectic():
    t = reduction_table(GroupSpec("Sp", 2))
    assert t.rows == ((0, 0), (1, 0), (0, 1), (1, 0), (0, 0))


def test_reduction_table_spin_odd():
    t = reduction_table(GroupSpec("SpinOdd", 2))
    # the middle wedge power folds onto the spin class
    assert t.rows == ((0, 0), (1, 0), (-1, 8), (-1, 8), (1, 0), (0, 0))


def test_reduction_table_spin_even():
    t6 = reduction_table(GroupSpec("SpinEven", 3))
    assert t6.rows == (
        (0, 0, 0),
        (1, 0, 0),
        (0, 4, 4),
        (-2, 8, 8),
        (0, 4, 4),
        (1, 0, 0),
        (0, 0, 0),
    )
    t8 = reduction_table(GroupSpec("SpinEven", 4))
    assert t8.rows == (
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (-1, 0, 8, 8),
        (0, -2, 16, 16),
        (-1, 0, 8, 8),
        (0, 1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 0, 0),
    )


def test_reduction_table_g2():
    t = reduction_table(GroupSpec("G2"))
    assert t.rows == (
        (0, 0),
        (1, 0),
        (1, 1),
        (14, -1),
        (14, -1),
        (1, 1),
        (1, 0),
        (0, 0),
    )


def test_reduction_table_rejects_unitary_families():
    with pytest.raises(ValueError):
        reduction_table(GroupSpec("U", 3))
    with pytest.raises(ValueError):
        reduction_table(GroupSpec("SU", 3))


def test_pipeline_agrees_with_closed_forms():
    groups = (
        [GroupSpec("Sp", n) for n in range(1, 7)]
        + [GroupSpec("SpinOdd", n) for n in range(1, 7)]
        + [GroupSpec("SpinEven", n) for n in (3, 4, 5, 6)]
        + [GroupSpec("G2")]
    )
    for g in groups:
        for l in range(1, 6):
            closed = adams_matrix(g, l, cross_check=False)
            piped = pullback_adams_matrix(g, l)
            assert closed.entries == piped.entries, (str(g), l)


def test_cross_check_flag_runs_both_routes():
    # must not raise anywhere in a quick sweep
    for fam, n in [("Sp", 3), ("SpinOdd", 3), ("SpinEven", 4)]:
        adams_matrix(GroupSpec(fam, n), 3, cross_check=True)
    assert g2_adams_matrix(4) is not None


def test_spinor_difference_is_an_eigenvector():
    # psi^l on d(S+) - d(S-) scales by l^n
    for n in (3, 4, 5):
        g = GroupSpec("SpinEven", n)
        dim = n
        diff = tuple(0 for _ in range(dim - 2)) + (1, -1)
        for l in (2, 3, 4):
            image = adams_matrix(g, l).apply(diff)
            assert image == tuple(l**n * c for c in diff), (n, l)


def test_families_constant():
    assert FAMILIES == ("U", "SU", "Sp", "SpinOdd", "SpinEven", "G2")
