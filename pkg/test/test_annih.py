import pytest

from conflab.core.annih import (
    DERIVATION,
    build_annihilation,
    check_antisymmetry,
    check_module_correspondence,
    check_super_jacobi_filtered,
    expected_bracket,
    match_closed_form,
    read_shape,
)
from conflab.core.catalog import build, condition1_Q
from conflab.core.exceptions import DomainError
from conflab.core.repmod import build_module


@pytest.fixture(scope="module")
def hvs_lie():
    return build_annihilation(build("HVS"), 4)


def test_truncated_hvs_is_a_lie_superalgebra(hvs_lie):
    assert check_antisymmetry(hvs_lie).passed
    report = check_super_jacobi_filtered(hvs_lie)
    assert report.passed, report.witness
    assert report.detail["triples"] > 0
    assert report.detail["skipped"] > 0


def test_extended_algebra_keeps_the_derivation():
    lie = build_annihilation(build("HVS"), 3, extended=True)
    assert DERIVATION in lie.generators
    a2 = lie.generator("A", 2)
    assert lie.bracket(DERIVATION, a2) == {lie.generator("A", 1): -2}
    assert check_antisymmetry(lie).passed
    assert check_super_jacobi_filtered(lie).passed


@pytest.mark.parametrize(
    "spec",
    [
        {"tag": "HVS"},
        {"tag": "D4"},
        {"tag": "Dbar"},
        {"tag": "D2", "a": -1, "b": 0, "Q": condition1_Q(-1, c="c")},
    ],
    ids=["HVS", "D4", "Dbar", "D2"],
)
def test_closed_form_matches(spec):
    spec = dict(spec)
    alg = build(spec.pop("tag"), **spec)
    report = match_closed_form(build_annihilation(alg, 3))
    assert report.passed, report.witness
    assert report.target == f"Lie({alg.name})"


def test_closed_form_reports_central_terms():
    alg = build("Dbar", a=1, b=0, Q=condition1_Q(1, c=1), gamma=0)
    report = match_closed_form(build_annihilation(alg, 3))
    assert report.passed
    assert report.detail["c_terms"]


def test_expected_odd_bracket(hvs_lie):
    alg = hvs_lie.algebra
    x1, x2 = hvs_lie.generator("X", 1), hvs_lie.generator("X", 2)
    expected = {hvs_lie.generator("B", 3): 2}
    assert expected_bracket(alg, read_shape(alg), x1, x2) == expected
    assert hvs_lie.bracket(x1, x2) == expected


def test_read_shape_rejects_other_types():
    with pytest.raises(DomainError):
        read_shape(build("B2"))
    with pytest.raises(DomainError):
        read_shape(build("A3", phi3="l"))
    with pytest.raises(DomainError):
        match_closed_form(build_annihilation(build("B2"), 2))


def test_broken_bracket_detected(hvs_lie):
    a0, x1 = hvs_lie.generator("A", 0), hvs_lie.generator("X", 1)
    assert hvs_lie.bracket(a0, x1)
    broken = hvs_lie.replace_bracket(a0, x1, {})
    assert not check_antisymmetry(broken).passed


def test_truncation_limits():
    lie = build_annihilation(build("HVS"), 2)
    with pytest.raises(DomainError):
        lie.bracket(lie.generator("A", 2), lie.generator("A", 1))
    with pytest.raises(DomainError):
        build_annihilation(build("HVS"), -1)


@pytest.mark.parametrize("extended", [False, True])
def test_module_correspondence(extended):
    lie = build_annihilation(build("HVS"), 3, extended=extended)
    mod = build_module("M_cE", c=1, eps=1, delta=1, zeta=0)
    report = check_module_correspondence(lie, mod)
    assert report.passed, report.witness


def test_module_correspondence_needs_matching_algebra(hvs_lie):
    with pytest.raises(DomainError):
        check_module_correspondence(hvs_lie, build_module("V", delta=1, a=0))
