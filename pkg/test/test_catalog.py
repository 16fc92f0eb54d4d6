from fractions import Fraction

import pytest

from conflab.core.catalog import (
    CONDITION1_TABLE,
    FAMILIES,
    FNICM_TABLE,
    FamilySpec,
    build,
    build_general_O,
    condition1_Q,
    decompose,
    even_type,
    family_tags,
    super_deform,
    validate_condition1,
)
from conflab.core.exceptions import (
    ConditionViolation,
    DomainError,
    LabException,
    UnknownFamilyError,
)
from conflab.core.lcsa import check_jacobi, check_skew
from conflab.core.polyring import D, L, parse


@pytest.mark.parametrize("tag", family_tags())
def test_family_satisfies_axioms(tag):
    alg = build(tag)
    assert check_skew(alg).passed, check_skew(alg).witness
    assert check_jacobi(alg).passed, check_jacobi(alg).witness


def test_registry_tags():
    assert {"Vir", "NS", "HV", "HVS", "W", "Dbar"} <= set(FAMILIES)
    assert set(FNICM_TABLE) <= set(FAMILIES)
    assert FAMILIES["D4"].even_type == "D"


CONDITION1_ROWS = [
    (1, {}),
    (0, {"d": "c_d"}),
    (-1, {"d": "c_d"}),
    (-4, {}),
    (-6, {}),
]


@pytest.mark.parametrize("a, extra", CONDITION1_ROWS)
def test_condition1_rows_satisfy_jacobi(a, extra):
    q = condition1_Q(a, c="c", **extra)
    alg = even_type("D", a=a, b=0, Q=q)
    assert check_skew(alg).passed
    assert check_jacobi(alg).passed


@pytest.mark.parametrize("a", [2, 3, 5, -2])
def test_non_table_q_breaks_jacobi(a):
    q = parse("(d + 2*l)*d^2")
    with pytest.raises(ConditionViolation):
        even_type("D", a=a, b=0, Q=q)
    alg = even_type("D", strict=False, a=a, b=0, Q=q)
    assert not check_jacobi(alg).passed


def test_q_with_nonzero_b_breaks_jacobi():
    q = parse("(d + 2*l)*d^2")
    alg = even_type("D", strict=False, a=-1, b=1, Q=q)
    assert not check_jacobi(alg).passed
    assert check_jacobi(even_type("D", a=-1, b=0, Q=q)).passed


def test_condition1_validation():
    validate_condition1("a", "b", 0)
    validate_condition1(1, 0, condition1_Q(1, c=3))
    with pytest.raises(ConditionViolation):
        validate_condition1(1, "b", condition1_Q(1))
    with pytest.raises(ConditionViolation):
        validate_condition1(1, 1, condition1_Q(1))
    with pytest.raises(ConditionViolation):
        validate_condition1(0, 0, condition1_Q(1))
    with pytest.raises(ConditionViolation):
        condition1_Q(2)
    with pytest.raises(ConditionViolation):
        condition1_Q(1, d=1)


def test_decompose_recovers_coefficients():
    entry = CONDITION1_TABLE[Fraction(0)]
    assert decompose(condition1_Q(0, 2, 3), entry) == [2, 3]
    assert decompose(D * D * D, entry) is None


def test_dbar_gamma_constraint():
    with pytest.raises(ConditionViolation):
        build("Dbar", gamma=1)
    alg = build("Dbar", a=1, b=0, Q=0, gamma=1)
    assert check_jacobi(alg).passed
    assert alg.q("B", "X", "X") == 1


def test_super_deformation_of_w_is_d4():
    deformed = super_deform(build("W"), "X")
    assert deformed.same_structure(build("D4"))
    assert deformed.name == "W^s(X)"
    with pytest.raises(DomainError):
        super_deform(build("B2"), "X")
    with pytest.raises(DomainError):
        super_deform(build("HV"), "L")


def test_general_abelian_even_families():
    alg = build_general_O(1, 2, ["l", "1 + l"])
    assert alg.names == ("A1", "A2", "X")
    assert check_jacobi(alg).passed
    second = build_general_O(2, 2, ["d", "1"])
    assert second.q("X", "X", "A1") == D
    with pytest.raises(DomainError):
        build_general_O(3, 1, ["l"])
    with pytest.raises(DomainError):
        build_general_O(1, 2, ["l"])
    with pytest.raises(ConditionViolation):
        build_general_O(1, 2, ["d", "l"])


def test_slot_validation():
    with pytest.raises(ConditionViolation):
        build("A1", f1="d")
    with pytest.raises(ConditionViolation):
        build("A1", f1=0)
    with pytest.raises(DomainError):
        build("B2", alpha=1)
    forced = build("A1", strict=False, f1="d")
    assert not check_skew(forced).passed


def test_unknown_family():
    with pytest.raises(UnknownFamilyError) as info:
        build("Z9")
    assert isinstance(info.value, LabException)


def test_family_spec_names_the_algebra():
    spec = FamilySpec("A3", {"phi3": "l"})
    assert str(spec) == "A3(phi3=l)"
    alg = build(spec)
    assert alg.name == "A3(phi3=l)"
    assert alg.q("A", "B", "B") == L * 2


def test_even_types():
    assert check_jacobi(even_type("B")).passed
    assert check_jacobi(even_type("A", Q1="d + 2*l")).passed
    with pytest.raises(ConditionViolation):
        even_type("A", P1="l", Q1="d + 2*l")
