"""
Closed-form brackets of Lie(R)+ for the type D rank (2+1) shapes, and the
check that a conformal module is a module over the truncated annihilation
algebra.

With the shifted index A_m = A_(m+1), m ≥ -1, and the brackets

    [A_λ A] = (∂+2λ)A + Q(∂,λ)B    [A_λ B] = (∂+aλ+b)B
    [A_λ X] = (∂+αλ+β)X            [B_λ X] = γX
    [X_λ X] = (κ∂+ν)B

the annihilation algebra reads

    [A_m, A_n] = (m-n)A_{m+n} + (terms in B from Q)
    [A_m, B_n] = b B_{m+n+1} + ((a-1)(m+1) - n) B_{m+n}
    [A_m, X_s] = β X_{m+s+1} + ((α-1)(m+1) - s) X_{m+s}
    [B_n, X_s] = γ X_{n+s}
    [X_r, X_s] = ν B_{r+s} - κ(r+s) B_{r+s-1}
"""

from dataclasses import dataclass
from math import comb, factorial
from typing import Mapping

from conflab.core.annih.truncated import (
    AnnGenerator,
    Combination,
    TruncatedLieSuper,
    combine,
    element_at_level,
    format_combination,
)
from conflab.core.exceptions import DomainError
from conflab.core.lcsa import ConformalSuperAlgebra, Parity, sign
from conflab.core.polyring import PARTIAL, LAMBDA, D, L, MultiPoly, ZERO
from conflab.core.repmod import ConformalModule, jth_action
from conflab.core.structures import Report, Residual
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)

_PARITIES = {"A": Parity.EVEN, "B": Parity.EVEN, "X": Parity.ODD}


@dataclass(frozen=True)
class TypeDShape:
    """
    Parameters read off a rank (2+1) type D table.

    Attributes:
        q: The B-component of [A_λ A].
        a, b: [A_λ B] = (∂+aλ+b)B.
        alpha, beta: [A_λ X] = (∂+αλ+β)X.
        gamma: [B_λ X] = γX.
        kappa, nu: [X_λ X] = (κ∂+ν)B.
    """

    q: MultiPoly
    a: MultiPoly
    b: MultiPoly
    alpha: MultiPoly
    beta: MultiPoly
    gamma: MultiPoly
    kappa: MultiPoly
    nu: MultiPoly


def _affine(poly: MultiPoly, var: str, where: str) -> tuple[MultiPoly, MultiPoly]:
    """(coefficient of var, constant) of a polynomial of degree ≤ 1 in var."""
    linear, constant = poly.coeff(var, 1), poly.coeff(var, 0)
    if poly.degree(var) > 1 or {PARTIAL, LAMBDA} & (
        linear.variables() | constant.variables()
    ):
        raise DomainError(f"{where} = {poly} is not of the closed-form shape")
    return linear, constant


def _derivation_part(poly: MultiPoly, where: str) -> tuple[MultiPoly, MultiPoly]:
    """Split ∂ + tλ + s into (t, s)."""
    return _affine(poly - D, LAMBDA, where)


def _only(alg: ConformalSuperAlgebra, i: str, j: str, allowed: set) -> Mapping:
    row = alg.entry(i, j)
    extra = set(row) - allowed
    if extra:
        raise DomainError(f"[{i}_λ {j}] has components on {sorted(extra)}")
    return row


def read_shape(alg: ConformalSuperAlgebra) -> TypeDShape:
    """
    :raises DomainError: if ``alg`` is not a rank (2+1) algebra on A, B (even)
        and X (odd) with a Virasoro A and brackets of the shapes above.
    """
    if {b.name: b.parity for b in alg.basis} != _PARITIES:
        raise DomainError(f"{alg.name} is not a rank (2+1) algebra on A, B | X")
    aa = _only(alg, "A", "A", {"A", "B"})
    if aa.get("A", ZERO) != D + L.scale(2):
        raise DomainError(f"A does not generate a Virasoro subalgebra of {alg.name}")
    _only(alg, "B", "B", set())
    a, b = _derivation_part(_only(alg, "A", "B", {"B"}).get("B", ZERO), "[A_λ B]")
    alpha, beta = _derivation_part(
        _only(alg, "A", "X", {"X"}).get("X", ZERO), "[A_λ X]"
    )
    gamma = _only(alg, "B", "X", {"X"}).get("X", ZERO)
    if {PARTIAL, LAMBDA} & gamma.variables():
        raise DomainError(f"[B_λ X] = {gamma} is not a constant multiple of X")
    xx = _only(alg, "X", "X", {"B"}).get("B", ZERO)
    if LAMBDA in xx.variables():
        raise DomainError(f"[X_λ X] = {xx} depends on λ")
    kappa, nu = _affine(xx, PARTIAL, "[X_λ X]")
    return TypeDShape(aa.get("B", ZERO), a, b, alpha, beta, gamma, kappa, nu)


def _term(out: Combination, base: str, shifted: int, coefficient) -> None:
    """Add coefficient·base at raw level ``shifted`` when nonzero."""
    coefficient = MultiPoly.coerce(coefficient)
    if not coefficient:
        return
    if shifted < 0:
        raise DomainError(f"closed form produced {base}_({shifted})")
    generator = AnnGenerator(base, shifted, _PARITIES[base])
    out[generator] = out.get(generator, ZERO) + coefficient


def c_terms(alg: ConformalSuperAlgebra, q: MultiPoly, p: int, r: int) -> Combination:
    """
    B-part of [A_(p), A_(r)], expanded from Q(∂,λ) = Σ_j λ^j Q_j(∂) as
    Σ_j C(p, j) (j! Q_j(∂) B)_(p+r-j).
    """
    parts = []
    for j, qj in q.coefficients(LAMBDA).items():
        if j > p:
            continue
        elem = alg.element({"B": qj})
        weight = comb(p, j) * factorial(j)
        parts.append((MultiPoly.const(weight), element_at_level(alg, elem, p + r - j)))
    return combine(*parts)


def expected_bracket(
    alg: ConformalSuperAlgebra, shape: TypeDShape, g: AnnGenerator, h: AnnGenerator
) -> Combination:
    """Closed form of [g, h] on raw levels."""
    key = (g.base, h.base)
    flipped = {("B", "A"), ("X", "A"), ("X", "B")}
    if key in flipped:
        mirror = expected_bracket(alg, shape, h, g)
        return combine((-sign(g.parity, h.parity), mirror))
    out: Combination = {}
    if key == ("A", "A"):
        m, n = g.level - 1, h.level - 1
        _term(out, "A", m + n + 1, m - n)
        return combine((1, out), (1, c_terms(alg, shape.q, g.level, h.level)))
    if key == ("A", "B"):
        m, n = g.level - 1, h.level
        _term(out, "B", m + n + 1, shape.b)
        _term(out, "B", m + n, (shape.a - 1) * (m + 1) - n)
    elif key == ("A", "X"):
        m, s = g.level - 1, h.level
        _term(out, "X", m + s + 1, shape.beta)
        _term(out, "X", m + s, (shape.alpha - 1) * (m + 1) - s)
    elif key == ("B", "X"):
        _term(out, "X", g.level + h.level, shape.gamma)
    elif key == ("X", "X"):
        r, s = g.level, h.level
        _term(out, "B", r + s, shape.nu)
        if r + s:
            _term(out, "B", r + s - 1, -shape.kappa * (r + s))
    return combine((1, out))


def match_closed_form(lie: TruncatedLieSuper) -> Report:
    """
    Compare every stored bracket of ``lie`` (without ∂) against the closed
    forms. The detail carries the B-terms of [A_m, A_n] per shifted pair.

    :raises DomainError: if the algebra is not of the type D shape.
    """
    alg = lie.algebra
    shape = read_shape(alg)
    residuals = []
    central = {}
    for (g, h), value in sorted(lie.table.items()):
        if g.is_derivation or h.is_derivation:
            continue
        expected = expected_bracket(alg, shape, g, h)
        diff = combine((1, value), (-1, expected))
        for target, poly in sorted(diff.items()):
            residuals.append(Residual((str(g), str(h), str(target)), poly))
        if g.base == h.base == "A" and g.level <= h.level:
            terms = c_terms(alg, shape.q, g.level, h.level)
            if terms:
                central[f"{g.level - 1},{h.level - 1}"] = format_combination(terms)
    LOGGER.debug(f"closed form of Lie({alg.name}) checked on {len(lie.table)} pairs")
    return Report.from_residuals(
        "closed_form", f"Lie({alg.name})", residuals, cap=lie.cap, c_terms=central
    )


def _apply(
    mod: ConformalModule, g: AnnGenerator, vector: Mapping[str, MultiPoly]
) -> dict[str, MultiPoly]:
    if g.is_derivation:
        return {u: p * D for u, p in vector.items()}
    return jth_action(mod, g.base, g.level, vector)


def _apply_combination(
    mod: ConformalModule,
    combination: Mapping[AnnGenerator, MultiPoly],
    vector: Mapping[str, MultiPoly],
) -> dict[str, MultiPoly]:
    out: dict[str, MultiPoly] = {}
    for g, c in combination.items():
        for w, p in _apply(mod, g, vector).items():
            out[w] = out.get(w, ZERO) + c * p
    return out


def check_module_correspondence(lie: TruncatedLieSuper, mod: ConformalModule) -> Report:
    """
    ρ([g, h]) = ρ(g)ρ(h) - (-1)^{|g||h|} ρ(h)ρ(g) on every module generator,
    for every stored pair, where ρ(a_(n)) is the n-th action of ``mod`` and
    ρ(∂) is multiplication by ∂.
    """
    if mod.algebra.names != lie.algebra.names:
        raise DomainError(f"{mod.name} is not a module over {lie.algebra.name}")
    residuals = []
    for (g, h), value in sorted(lie.table.items()):
        s = sign(g.parity, h.parity)
        for v in mod.names:
            unit = {v: MultiPoly.const(1)}
            total: dict[str, MultiPoly] = {}
            for w, p in _apply(mod, g, _apply(mod, h, unit)).items():
                total[w] = total.get(w, ZERO) + p
            for w, p in _apply(mod, h, _apply(mod, g, unit)).items():
                total[w] = total.get(w, ZERO) - p.scale(s)
            for w, p in _apply_combination(mod, value, unit).items():
                total[w] = total.get(w, ZERO) - p
            for w in mod.names:
                poly = total.get(w, ZERO)
                if poly:
                    residuals.append(Residual((str(g), str(h), v, w), poly))
    return Report.from_residuals(
        "module_correspondence",
        f"{mod.name} over Lie({lie.algebra.name})",
        residuals,
        cap=lie.cap,
    )
