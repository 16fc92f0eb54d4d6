from fractions import Fraction

import pytest

from conflab.core.classify import (
    ODD_PROBES,
    branch_points,
    conditions_agree,
    derive_odd_structure,
    derived_families,
    in_span,
    rank,
    rational_nullspace,
    reduced_row_echelon,
    solve_fgh,
    solve_shift,
    solve_shift_parametric,
)
from conflab.core.exceptions import DomainError
from conflab.core.lcsa import check_jacobi
from conflab.core.polyring import MultiPoly, parse

X = MultiPoly.var("x")


def test_shift_constant_solutions():
    space = solve_shift(2, 0, "3/2", 0)
    assert space.dimension == 1
    assert space.verify()
    assert space.member()["f"] == 1
    assert space.describe() == ["f = 1"]


def test_shift_linear_solution():
    space = solve_shift(0, 0, 1, 0, degree=4)
    assert space.dimension == 1
    assert space.member()["f"] == X


def test_shift_without_solutions():
    space = solve_shift(2, 1, 3, 5)
    assert space.dimension == 0
    assert space.verify()
    assert space.describe() == ["only the zero solution"]


def test_shift_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_shift("two", 0, 0, 0)
    with pytest.raises(ValueError):
        solve_shift(0, 0, 0, 0, degree=-1)


def test_parametric_branches():
    branches = {b.degree: b for b in solve_shift_parametric(degree=3)}
    assert sorted(branches) == [0, 1]
    a, b, alpha, beta = (MultiPoly.var(p) for p in ("a", "b", "alpha", "beta"))
    assert conditions_agree(branches[0].conditions, [a - alpha * 2 + 1, b - beta * 2])
    assert conditions_agree(branches[1].conditions, [a, alpha - 1, b - beta * 2])
    assert not conditions_agree(branches[1].conditions, [a, b - beta * 2])
    assert branches[1].solution == X + beta * 2
    assert branches[1].describe().startswith("deg f = 1: f = ")


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (2, 0, [(0, Fraction(3, 2), 0)]),
        (0, 3, [(0, Fraction(1, 2), Fraction(3, 2)), (1, 1, Fraction(3, 2))]),
        (0, "-1/2", [(0, Fraction(1, 2), Fraction(-1, 4)), (1, 1, Fraction(-1, 4))]),
    ],
)
def test_branch_points(a, b, expected):
    branches = solve_shift_parametric(degree=3)
    assert branch_points(branches, a, b) == expected


def test_fgh_with_root():
    space = solve_fgh(X + 1, degree=3)
    assert space.dimension == 0
    assert space.describe() == ["only the zero solution"]


def test_fgh_with_constant():
    space = solve_fgh(2, degree=2)
    assert space.dimension == 3
    assert space.verify()
    member = space.member()
    assert member["g"] == member["h"]
    assert member["g"].variables() == {"y"}


def test_fgh_rejects_bad_f():
    with pytest.raises(DomainError):
        solve_fgh(0)
    with pytest.raises(DomainError):
        solve_fgh(MultiPoly.var("y") + 1)


def test_rational_linear_algebra():
    assert rank([[1, 1, 0], [0, 0, 1], [1, 1, 1]]) == 2
    assert rational_nullspace([[1, 1, 0], [0, 0, 1]]) == [
        (Fraction(1), Fraction(-1), Fraction(0))
    ]
    assert rational_nullspace([], 2) == [(1, 0), (0, 1)]
    assert in_span([2, 2, 0], [[1, 1, 0]])
    assert not in_span([1, 0, 0], [[1, 1, 0]])
    assert in_span([0, 0], [])


def test_reduced_row_echelon():
    assert reduced_row_echelon([[2, 4], [1, 3]]) == ([[1, 0], [0, 1]], (0, 1))
    reduced, pivots = reduced_row_echelon([[0, 2, 4], [0, 1, 2]])
    assert reduced == [[0, 1, 2], [0, 0, 0]]
    assert pivots == (1,)
    assert reduced_row_echelon([], 2) == ([], ())
    assert rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    with pytest.raises(ValueError):
        reduced_row_echelon([[1, 2], [3]])


@pytest.mark.parametrize(
    "tag, params, expected", ODD_PROBES, ids=[f"{t}{dict(p)}" for t, p, _ in ODD_PROBES]
)
def test_odd_structures_reproduce_catalog(tag, params, expected):
    structures = derive_odd_structure(tag, params, degree=2)
    assert expected <= derived_families(structures)
    for structure in structures:
        assert check_jacobi(structure.algebra).passed
        assert structure.describe()


def test_type_c_structure_outside_catalog():
    structures = derive_odd_structure("C", degree=2)
    unmatched = [s for s in structures if not s.tags and s.action == "trivial"]
    assert unmatched
    found = unmatched[0].algebra
    assert found.q("X", "X", "B") == parse("1 + d + d^2")
    assert not found.q("X", "X", "A")
    assert not found.entry("A", "X")


def test_odd_derivation_needs_rational_parameters():
    with pytest.raises(DomainError):
        derive_odd_structure("D")
