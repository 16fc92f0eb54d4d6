import pytest

from conflab.core.catalog import build
from conflab.core.exceptions import ConditionViolation, DomainError
from conflab.core.lcsa import Parity
from conflab.core.polyring import D, L, ONE, ZERO, parse
from conflab.core.repmod import (
    act_on,
    build_module,
    check_module,
    irreducibility_probe,
    jth_action,
    locality_bounds,
    locality_check,
    module_cases,
    quotient_module,
    rank1_closure_test,
    submodule_closure,
)


@pytest.mark.parametrize(
    "module_spec, algebra_spec", module_cases(), ids=lambda spec: str(spec)
)
def test_module_cases_satisfy_axioms(module_spec, algebra_spec):
    mod = build_module(module_spec, algebra_spec)
    report = check_module(mod)
    assert report.passed, report.witness


def test_perturbed_module_fails():
    mod = build_module("NSbar")
    broken = mod.replace_action(
        "G", "v1", {"v0": parse("d + delta*l + a")}, label="NSbar[fault]"
    )
    report = check_module(broken)
    assert not report.passed
    assert report.target == "NSbar[fault]"


def test_module_names_and_parameters():
    mod = build_module("V")
    assert mod.name == "V/Vir"
    assert mod.names == ("v",)
    assert mod.parameters() == {"delta", "a"}
    pair = build_module("M_cE", c=1, eps=1)
    assert pair.names == ("v0", "v1")
    assert pair.parity("v1") is Parity.ODD


def test_parity_change():
    mod = build_module("NSbar", delta=1, a=0)
    flipped = mod.with_parity_changed()
    assert flipped.name == "Π" + mod.name
    assert flipped.parity("v0") is Parity.ODD
    assert check_module(flipped).passed


def test_slot_constraints():
    with pytest.raises(ConditionViolation):
        build_module("NSbar", delta=0)
    with pytest.raises(ConditionViolation):
        build_module("NSbar_prime", delta="1/2")
    with pytest.raises(ConditionViolation):
        build_module("M_cE", c=0, eps=1)
    with pytest.raises(ConditionViolation):
        build_module("M_omega", build("D4", alpha=1, beta=0, gamma=1), omega=0)
    with pytest.raises(ConditionViolation):
        build_module("M_omega", build("D1", a=2, b=0, Q=0), omega=1)


def test_actions_and_locality():
    mod = build_module("V", delta=2, a=1)
    assert act_on(mod, "L", {"v": D}) == {"v": (D + L) * (D + L * 2 + 1)}
    assert jth_action(mod, "L", 1, {"v": ONE}) == {"v": 2}
    assert jth_action(mod, "L", 5, {"v": ONE}) == {}
    assert locality_bounds(mod) == {("L", "v"): 1}
    assert locality_check(mod, 4)


def test_probe_finds_torsion_free_submodule():
    mod = build_module("V", delta=0, a=1)
    result = irreducibility_probe(mod)
    assert result.reducible
    assert result.witness.label == "(d + 1)*v"
    assert result.closure.hnf_basis == ((D + 1,),)


@pytest.mark.parametrize(
    "tag, slots",
    [
        ("HVS_1", {"delta0": 1, "eta": 0}),
        ("HVS_2", {"delta0": 1, "eta": 0}),
        ("HVS_3", {"delta0": 1, "eta": 0}),
        ("HVS_4", {"eta": 0, "k": 1}),
        ("HVS_5", {"eta": 0}),
        ("HVS_6", {"eta": 0}),
    ],
)
def test_hvs_modules_are_reducible(tag, slots):
    mod = build_module(tag, **slots)
    assert check_module(mod).passed
    result = irreducibility_probe(mod)
    assert result.reducible
    assert result.witness.label == "v1"


@pytest.mark.parametrize(
    "mod",
    [
        build_module("V", delta=1, a=0),
        build_module("M_cE", c=1, eps=1, delta=1, zeta=0),
        build_module(
            "M_omega", build("D4", alpha=1, beta=0, gamma=1), delta=0, eta=0, omega=1
        ),
    ],
    ids=["V", "M_cE", "M_omega"],
)
def test_probe_finds_no_submodule(mod):
    result = irreducibility_probe(mod)
    assert not result.reducible
    assert result.witness is None
    assert result.tried >= mod.rank


def test_probe_needs_instantiated_module():
    with pytest.raises(DomainError):
        irreducibility_probe(build_module("V"))


def test_rank1_closure():
    mod = build_module("V", delta=0, a=1)
    assert rank1_closure_test(D + 1, mod)
    assert not rank1_closure_test(D, mod)
    with pytest.raises(DomainError):
        rank1_closure_test(ZERO, mod)
    with pytest.raises(DomainError):
        rank1_closure_test(D, build_module("M_cE", c=1, eps=1, delta=1, zeta=0))


def test_submodule_closure_of_odd_generator():
    mod = build_module("HVS_1", delta0=1, eta=0)
    assert submodule_closure(mod, [(ZERO, ONE)]).hnf_basis == ((ZERO, ONE),)
    assert submodule_closure(mod, [(ONE, ZERO)]).is_full()


def test_quotient_module():
    mod = build_module("HVS_2", delta0=1, eta=0)
    quotient = quotient_module(mod, "v1")
    assert quotient.names == ("v0",)
    assert quotient.name == mod.name + "/v1"
    assert check_module(quotient).passed
    with pytest.raises(DomainError):
        quotient_module(mod, "v0")
