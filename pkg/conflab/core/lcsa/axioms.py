"""
Axiom residuals of λ-brackets and λ-actions, computed as exact polynomial
identities in (∂, λ, μ) and in every symbolic parameter.
"""

from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from conflab.core.lcsa.algebra import ConformalSuperAlgebra, sign, skew_image
from conflab.core.polyring import D, L, M, MultiPoly, ZERO
from conflab.core.structures import Report, Residual

Action = Callable[[str, str], Mapping[str, MultiPoly]]

_SHIFTS = {
    "outer": {"d": D + L, "l": M},  # P(∂+λ, μ)
    "swap": {"d": D + M},  # P(∂+μ, λ)
    "mu": {"l": M},  # P(∂, μ)
    "sum": {"l": L + M},  # P(∂, λ+μ)
    "bracket": {"d": -L - M},  # Q(-λ-μ, λ)
}


@lru_cache(maxsize=8192)
def _shifted(poly: MultiPoly, kind: str) -> MultiPoly:
    return poly.subs(_SHIFTS[kind])


def check_skew(alg: ConformalSuperAlgebra) -> Report:
    """
    Residual Q_ij^k(∂,λ) + (-1)^{|i||j|} Q_ji^k(∂,-∂-λ) for every (i, j, k).
    """
    residuals = []
    for i in alg.names:
        for j in alg.names:
            pp = int(alg.parity(i)) * int(alg.parity(j))
            for k in alg.names:
                mirror = alg.q(j, i, k)
                value = alg.q(i, j, k) - skew_image(mirror, pp)
                if value:
                    residuals.append(Residual((i, j, k), value))
    return Report.from_residuals("skew", alg.name, residuals)


def representation_residuals(
    alg: ConformalSuperAlgebra,
    targets: Sequence[str],
    action: Action,
    actors: Iterable[str] | None = None,
) -> list[Residual]:
    """
    Residuals of

        [a_λ b]_{λ+μ} v = a_λ(b_μ v) - (-1)^{|a||b|} b_μ(a_λ v)

    for generators a, b of ``alg`` and v, t among ``targets``, where
    ``action(a, v)`` returns ``{w: P_av^w(∂, λ)}``. With the adjoint action
    this is the Jacobi identity.
    """
    actors = tuple(actors or alg.names)
    out = []
    for a in actors:
        for b in actors:
            s = sign(alg.parity(a), alg.parity(b))
            bracket = alg.entry(a, b)
            for v in targets:
                total: dict[str, MultiPoly] = {}

                def add(t, poly):
                    total[t] = total.get(t, ZERO) + poly

                for w, p_bv in action(b, v).items():
                    outer = _shifted(p_bv, "outer")
                    for t, p_aw in action(a, w).items():
                        add(t, outer * p_aw)
                for w, p_av in action(a, v).items():
                    swapped = _shifted(p_av, "swap")
                    for t, p_bw in action(b, w).items():
                        add(t, -(swapped * _shifted(p_bw, "mu")).scale(s))
                for c, q_ab in bracket.items():
                    left = _shifted(q_ab, "bracket")
                    for t, p_cv in action(c, v).items():
                        add(t, -(left * _shifted(p_cv, "sum")))
                for t in targets:
                    value = total.get(t, ZERO)
                    if value:
                        out.append(Residual((a, b, v, t), value))
    return out


def check_jacobi(alg: ConformalSuperAlgebra) -> Report:
    """
    Jacobi residual for every (i, j, k, t), identically in parameters.
    """
    residuals = representation_residuals(alg, alg.names, alg.entry)
    return Report.from_residuals("jacobi", alg.name, residuals)
