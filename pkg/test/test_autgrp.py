from fractions import Fraction
import random

import pytest

from conflab.core.autgrp import (
    AUTOMORPHISM_CASES,
    GradedAutomorphism,
    Rule,
    check_family,
    compose,
    family_constraint,
    group_axiom_sample,
    invert,
    is_automorphism,
    is_identity,
    run_necessity_probes,
    same_map,
    sample_member,
    soundness_sample,
    type_d_even_rules,
)
from conflab.core.catalog import build
from conflab.core.exceptions import DomainError, ShapeError, UnknownFamilyError
from conflab.core.polyring import D, ONE, ZERO

CASE_IDS = [f"{tag}{sorted(params.items())}" for tag, params in AUTOMORPHISM_CASES]


def test_rescaling_automorphism_of_a3():
    alg = build("A3", phi3="l")
    sigma = GradedAutomorphism.triangular(1, 4, 2, -2 * D)
    assert is_automorphism(alg, sigma).passed
    assert check_family("A3", {"phi3": "l"}, sigma).passed


def test_wrong_odd_scale_of_b2():
    alg = build("B2")
    sigma = GradedAutomorphism.triangular(1, 1, 2)
    report = is_automorphism(alg, sigma)
    assert not report.passed
    assert report.witness is not None
    membership = check_family("B2", {}, sigma)
    assert not membership.passed
    assert membership.witness == Rule.K3_SQUARE_ONE.value


def test_swap_is_not_an_automorphism_of_b1():
    alg = build("B1", alpha=1, beta=0)
    sigma = GradedAutomorphism.swap(1, 1)
    assert not is_automorphism(alg, sigma).passed
    assert not family_constraint("B1", {"alpha": 1, "beta": 0}).admits(sigma)


def test_is_automorphism_needs_the_rank_three_basis():
    with pytest.raises(DomainError):
        is_automorphism(build("NS"), GradedAutomorphism.identity())


def test_shape_validation():
    with pytest.raises(ShapeError):
        GradedAutomorphism(((ONE, ZERO), (ONE, ONE)), 1)
    with pytest.raises(ShapeError):
        GradedAutomorphism.triangular(1, 1, 0)
    with pytest.raises(ShapeError):
        GradedAutomorphism.triangular(D, 1, 1)
    with pytest.raises(ShapeError):
        GradedAutomorphism.swap(1, 1).g


def test_compose_and_invert():
    sigma = GradedAutomorphism.triangular(2, 3, Fraction(1, 2), D + 1)
    tau = GradedAutomorphism.triangular(1, -1, 3, D * D)
    assert is_identity(compose(invert(sigma), sigma))
    assert is_identity(compose(sigma, invert(sigma)))
    assert same_map(invert(compose(sigma, tau)), compose(invert(tau), invert(sigma)))
    swap = GradedAutomorphism.swap(2, 3, -1)
    assert is_identity(compose(invert(swap), swap))
    assert compose(swap, swap).is_swap is False


def test_sample_member_respects_rules():
    constraint = family_constraint("D2", {"a": 2, "b": 0, "Q": 0})
    rng = random.Random(7)
    for _ in range(20):
        sigma = sample_member(constraint, rng)
        assert constraint.admits(sigma)
        assert sigma.k1 == 1
        assert sigma.k3 * sigma.k3 == sigma.k2


def test_type_d_cases():
    case, rules, span = type_d_even_rules(Fraction(2), Fraction(1), ZERO)
    assert case.startswith("(i)")
    assert span == (ONE - D,)
    case, rules, span = type_d_even_rules(Fraction(0), Fraction(0), D)
    assert Rule.K2_ONE in rules
    assert span == (D, D**2)


@pytest.mark.parametrize("tag, params", AUTOMORPHISM_CASES, ids=CASE_IDS)
def test_group_axioms(tag, params):
    report = group_axiom_sample(tag, params, count=8, seed=3)
    assert report.passed, report.witness


@pytest.mark.parametrize("tag, params", AUTOMORPHISM_CASES, ids=CASE_IDS)
def test_family_soundness(tag, params):
    report = soundness_sample(tag, params, count=8, seed=5)
    assert report.passed, report.witness


@pytest.mark.parametrize("tag, params", AUTOMORPHISM_CASES, ids=CASE_IDS)
def test_necessity_probes(tag, params):
    reports = run_necessity_probes(tag, params)
    assert reports
    for report in reports:
        assert report.passed, report.target


def test_sampling_is_seeded():
    first = group_axiom_sample("A3", {"phi3": "l"}, count=4, seed=11)
    second = group_axiom_sample("A3", {"phi3": "l"}, count=4, seed=11)
    assert first.to_record() == second.to_record()


def test_family_constraint_errors():
    with pytest.raises(UnknownFamilyError):
        family_constraint("B0")
    with pytest.raises(DomainError):
        family_constraint("D1")
    with pytest.raises(DomainError):
        group_axiom_sample("B1")
