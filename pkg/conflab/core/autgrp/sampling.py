"""
Seeded sampling of automorphism group members, and the group-law and
soundness checks run on the samples.
"""

import random
from fractions import Fraction
from typing import Mapping, Optional

from conflab.config import Settings
from conflab.core.autgrp.automorphism import (
    GradedAutomorphism,
    compose,
    invert,
    is_automorphism,
    is_identity,
)
from conflab.core.autgrp.families import (
    AutFamilyConstraint,
    Rule,
    family_constraint,
    necessity_probes,
)
from conflab.core.catalog import build
from conflab.core.catalog.families import SlotValue
from conflab.core.exceptions import DomainError
from conflab.core.polyring import D, ZERO
from conflab.core.structures import Report
from conflab.util.logging import get_logger
from conflab.util.validation import validate_nonnegative_int, validate_positive_int

LOGGER = get_logger(__name__)

SCALARS = tuple(
    Fraction(v) for v in (1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2))
)
G_DEGREE = 3


def _scalar(rng: random.Random) -> Fraction:
    return rng.choice(SCALARS)


def _coefficient(rng: random.Random) -> Fraction:
    return rng.choice((Fraction(0),) + SCALARS)


def sample_member(
    constraint: AutFamilyConstraint, rng: random.Random
) -> GradedAutomorphism:
    """
    A random member: constants from ``SCALARS``, a free g(∂) of degree at
    most 3, a spanned g(∂) as a random combination of the span.
    """
    rules = constraint.rules
    k1 = Fraction(1) if Rule.K1_ONE in rules else _scalar(rng)
    if Rule.K2_ONE in rules:
        k2 = Fraction(1)
    elif Rule.K2_SQUARE_K1 in rules:
        k2 = k1 * k1
    else:
        k2 = _scalar(rng)
    k3 = _scalar(rng)
    if Rule.K3_SQUARE_ONE in rules:
        k3 = rng.choice((Fraction(1), Fraction(-1)))
    elif Rule.K3_SQUARE_K2 in rules:
        if Rule.K2_ONE in rules:
            k3 = rng.choice((Fraction(1), Fraction(-1)))
        elif Rule.K2_SQUARE_K1 in rules:
            k3 = rng.choice((k1, -k1))
        else:
            k2 = k3 * k3
    if constraint.g_span is None:
        g = sum((D**i * _coefficient(rng) for i in range(G_DEGREE + 1)), ZERO)
    else:
        g = sum((p * _coefficient(rng) for p in constraint.g_span), ZERO)
    return GradedAutomorphism.triangular(k1, k2, k3, g)


def _context(tag: str, params: Optional[Mapping[str, SlotValue]]):
    alg = build(tag, **dict(params or {}))
    if not alg.is_instantiated():
        raise DomainError(f"{alg.name} must be instantiated")
    return alg, family_constraint(tag, params)


def group_axiom_sample(
    tag: str,
    params: Optional[Mapping[str, SlotValue]] = None,
    count: Optional[int] = None,
    seed: Optional[int] = None,
) -> Report:
    """
    Draw ``count`` members and check that each is an automorphism, that the
    composite and inverse of members are members, that composition is
    associative on consecutive triples, and that invert(σ)∘σ is the identity.
    """
    settings = Settings()
    count = validate_positive_int(settings["samples"] if count is None else count)
    seed = validate_nonnegative_int(settings["seed"] if seed is None else seed)
    alg, constraint = _context(tag, params)
    rng = random.Random(seed)
    members = [sample_member(constraint, rng) for _ in range(count)]
    failures = []

    def expect(ok: bool, what: str, sigma: GradedAutomorphism) -> None:
        if not ok:
            failures.append(f"{what}: {sigma}")

    for i, sigma in enumerate(members):
        expect(is_automorphism(alg, sigma).passed, "not an automorphism", sigma)
        inverse = invert(sigma)
        expect(constraint.admits(inverse), "inverse outside the group", inverse)
        expect(is_identity(compose(inverse, sigma)), "invert(σ)∘σ != id", sigma)
        tau = members[(i + 1) % count]
        product = compose(sigma, tau)
        expect(constraint.admits(product), "composite outside the group", product)
        direct = is_automorphism(alg, product).passed
        expect(direct, "composite not an automorphism", product)
        rho = members[(i + 2) % count]
        left = compose(compose(sigma, tau), rho)
        right = compose(sigma, compose(tau, rho))
        expect(left == right, "composition not associative", left)
    LOGGER.info(
        f"sampled {count} automorphisms of {alg.name}",
        extra={"family": tag, "seed": seed, "failures": len(failures)},
    )
    return Report.verdict(
        "group_axioms",
        alg.name,
        not failures,
        case=constraint.case,
        samples=count,
        seed=seed,
        failures=len(failures),
        witness=failures[0] if failures else None,
    )


def soundness_sample(
    tag: str,
    params: Optional[Mapping[str, SlotValue]] = None,
    count: Optional[int] = None,
    seed: Optional[int] = None,
) -> Report:
    """
    Compare the family predicate with :func:`is_automorphism` on sampled
    members and on members perturbed by a necessity probe.
    """
    settings = Settings()
    count = validate_positive_int(settings["samples"] if count is None else count)
    seed = validate_nonnegative_int(settings["seed"] if seed is None else seed)
    alg, constraint = _context(tag, params)
    rng = random.Random(seed)
    probes = [p for _, p in necessity_probes(tag, params) if not p.is_swap]
    mismatches = []
    for i in range(count):
        sigma = sample_member(constraint, rng)
        if i % 2 and probes:
            sigma = compose(rng.choice(probes), sigma)
        claimed = constraint.admits(sigma)
        if claimed != is_automorphism(alg, sigma).passed:
            mismatches.append(f"predicate says {claimed} for {sigma}")
    return Report.verdict(
        "family_soundness",
        alg.name,
        not mismatches,
        case=constraint.case,
        samples=count,
        seed=seed,
        witness=mismatches[0] if mismatches else None,
    )


def run_necessity_probes(
    tag: str, params: Optional[Mapping[str, SlotValue]] = None
) -> list[Report]:
    """Each probe must be rejected by both the predicate and the direct check."""
    alg, constraint = _context(tag, params)
    reports = []
    for label, sigma in necessity_probes(tag, params):
        direct = is_automorphism(alg, sigma).passed
        reports.append(
            Report.verdict(
                "necessity",
                f"{alg.name} [{label}]",
                not direct and not constraint.admits(sigma),
                sigma=sigma.describe(),
            )
        )
    return reports
