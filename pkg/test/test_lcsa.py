import pytest
from hypothesis import given

from conflab.core.autgrp import AUTOMORPHISM_CASES
from conflab.core.catalog import build
from conflab.core.exceptions import DomainError, UnsupportedOperationError
from conflab.core.lcsa import (
    ConformalSuperAlgebra,
    bracket_eval,
    check_ideal,
    check_jacobi,
    check_skew,
    derived_series,
    even,
    even_part,
    hermite_normal_form,
    is_nilpotent,
    is_perfect,
    is_solvable,
    jth_products,
    lower_central_series,
    odd,
    reconstruct,
    submodule_of,
)
from conflab.core.polyring import D, L, ONE, ZERO, MultiPoly
from conflab.core.structures import Status
from test.strategies import polys

VIR = D + L * 2


@pytest.fixture
def vir():
    return ConformalSuperAlgebra.from_brackets(
        (even("L"),), {("L", "L"): {"L": VIR}}, name="Vir"
    )


def test_virasoro_passes_axioms(vir):
    assert check_skew(vir).status is Status.PASS
    assert check_jacobi(vir).status is Status.PASS


def test_skew_witness():
    alg = ConformalSuperAlgebra.from_brackets(
        (even("B"), odd("X")), {("X", "X"): {"B": L}}, name="broken"
    )
    report = check_skew(alg)
    assert report.status is Status.FAIL
    assert report.witness == "(X,X,B): d + 2*l"


def test_shifted_virasoro_fails_both_axioms():
    alg = ConformalSuperAlgebra.from_brackets(
        (even("L"),), {("L", "L"): {"L": VIR + 1}}
    )
    assert not check_skew(alg).passed
    assert not check_jacobi(alg).passed


def test_mirror_entries_filled():
    alg = build("B2")
    assert alg.q("X", "A", "X") == D / 2 + L * 3 / 2
    assert alg.q("A", "X", "X") == D + L * 3 / 2


def test_bracket_eval_sesquilinear(vir):
    partial = vir.element({"L": D})
    gen = vir.generator("L")
    assert bracket_eval(vir, partial, gen) == {"L": -L * VIR}
    assert bracket_eval(vir, gen, partial) == {"L": (D + L) * VIR}


def test_mixed_element_rejected():
    alg = build("B2")
    mixed = alg.element({"A": ONE, "X": ONE})
    assert not mixed.is_homogeneous
    with pytest.raises(DomainError):
        bracket_eval(alg, mixed, alg.generator("A"))


def test_jth_products_reconstruct(vir):
    products = jth_products(vir, "L", "L")
    assert sorted(products) == [0, 1]
    assert products[0]["L"] == D
    assert products[1]["L"] == 2
    assert reconstruct(products) == {"L": VIR}


def test_constructor_errors():
    with pytest.raises(DomainError):
        ConformalSuperAlgebra((even("A"), odd("A")), {})
    with pytest.raises(DomainError):
        ConformalSuperAlgebra((even("d"),), {})
    with pytest.raises(DomainError):
        ConformalSuperAlgebra.from_brackets(
            (even("A"), odd("X")), {("A", "A"): {"X": ONE}}
        )


def test_parameters_and_evaluate():
    alg = build("B1")
    assert alg.parameters() == {"alpha", "beta"}
    assert not alg.is_instantiated()
    fixed = alg.evaluate({"alpha": 1, "beta": 0})
    assert fixed.is_instantiated()
    assert fixed.q("A", "X", "X") == D + L


def test_hermite_normal_form():
    sub = hermite_normal_form([(D, ZERO), (D**2, ONE)])
    assert sub.hnf_basis == ((D, ZERO), (ZERO, ONE))
    assert sub.pivots == (0, 1)
    assert not sub.is_full()
    assert sub.contains((D**3, MultiPoly.const(5)))
    assert not sub.contains((ONE, ZERO))
    assert sub.reduce((D + 1, ZERO)) == (ONE, ZERO)


def test_hermite_normal_form_is_canonical():
    assert hermite_normal_form([(D * D - 1,), (D * D + D,)]).hnf_basis == ((D + 1,),)
    assert hermite_normal_form([(D,), (D + 1,)]).is_full()
    assert hermite_normal_form([(D * 2 + 2,)]).hnf_basis == ((D + 1,),)
    assert hermite_normal_form([(D,), (D * 3,)]) == hermite_normal_form([(D,)])
    assert hermite_normal_form([], 2).is_zero()


def test_hermite_normal_form_rejects_parameters():
    with pytest.raises(UnsupportedOperationError):
        hermite_normal_form([(MultiPoly.var("a"),)])


@given(polys(variables=("d",)), polys(variables=("d",)))
def test_module_contains_multiples_of_its_generator(p, q):
    sub = hermite_normal_form([(p, q)], 2)
    assert sub.contains((p * D, q * D))
    assert sub.contains((ZERO, ZERO))


def test_series_of_nilpotent_family():
    alg = build("A2", f2="d + 2*l", psi="1 + d")
    assert is_nilpotent(alg)
    assert is_solvable(alg)
    assert lower_central_series(alg).terms[-1].is_zero()


def test_series_of_solvable_family():
    alg = build("A3", phi3="l")
    assert is_solvable(alg)
    assert not is_nilpotent(alg)
    series = lower_central_series(alg)
    assert not series.capped
    assert not series.last.is_zero()


def test_perfect_family():
    alg = build("B2")
    assert is_perfect(alg)
    assert not is_solvable(alg)
    assert len(derived_series(alg).terms) == 1


def test_series_need_instantiated_algebra():
    with pytest.raises(DomainError):
        derived_series(build("B1"))
    with pytest.raises(DomainError):
        is_perfect(build("B1"))


@pytest.mark.parametrize("tag, params", AUTOMORPHISM_CASES)
def test_solvable_iff_even_part_solvable(tag, params):
    alg = build(tag, **params)
    assert is_solvable(alg) == is_solvable(even_part(alg))


def test_ideals():
    alg = build("A3", phi3="l")
    assert check_ideal(alg, submodule_of(alg, [{"B": ONE}]))
    assert not check_ideal(alg, submodule_of(alg, [{"A": ONE}]))


def test_even_part_and_restrict():
    alg = build("B2")
    part = even_part(alg)
    assert part.names == ("A", "B")
    assert part.name == "B2_even"
    assert alg.restrict(["A", "X"]).names == ("A", "X")
    with pytest.raises(DomainError):
        alg.restrict(["X"])
