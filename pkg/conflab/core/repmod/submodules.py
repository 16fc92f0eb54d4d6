"""
Submodules of instantiated conformal modules: closure under the j-th
actions, a bounded reducibility probe, rank-one divisibility, and quotients
by a generator spanning a submodule.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from conflab.core.exceptions import DomainError
from conflab.core.lcsa import PolySubmodule, hermite_normal_form, unit_rows
from conflab.core.lcsa.hnf import Row
from conflab.core.polyring import PARTIAL, D, L, MultiPoly, ZERO, rational_roots
from conflab.core.repmod.module import (
    ConformalModule,
    jth_actions,
    row_of,
    vector_of,
)
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)


def _require_instantiated(mod: ConformalModule) -> None:
    params = mod.parameters()
    if params:
        raise DomainError(
            f"{mod.name} mentions parameters {sorted(params)}; "
            "instantiate them to rationals first"
        )


def rank1_closure_test(p: MultiPoly, mod: ConformalModule) -> bool:
    """
    True iff C[∂]p(∂)v is a submodule of the rank-one module ``mod``, i.e.
    p(∂) divides p(∂+λ)·P(∂,λ) for the action polynomial P of every
    algebra generator.

    :raises DomainError: if ``p`` is zero or ``mod`` has rank other than one.
    """
    p = MultiPoly.coerce(p)
    if p.is_zero():
        raise DomainError("p must be nonzero")
    if mod.rank != 1:
        raise DomainError(f"{mod.name} has rank {mod.rank}, expected 1")
    _require_instantiated(mod)
    v = mod.names[0]
    shifted = p.subs({PARTIAL: D + L})
    for a in mod.algebra.names:
        action = mod.act(a, v).get(v, ZERO)
        _, remainder = (shifted * action).divmod(p, PARTIAL)
        if remainder:
            return False
    return True


def submodule_closure(
    mod: ConformalModule, generators: Iterable[Sequence[MultiPoly]]
) -> PolySubmodule:
    """
    Smallest C[∂]-submodule containing ``generators`` and closed under every
    j-th action, computed as a fixpoint of Hermite normal forms.
    """
    _require_instantiated(mod)
    current = hermite_normal_form(list(generators), mod.rank)
    while True:
        rows = list(current.hnf_basis)
        for row in current.hnf_basis:
            vector = vector_of(mod, row)
            for a in mod.algebra.names:
                for image in jth_actions(mod, a, vector).values():
                    rows.append(row_of(mod, image))
        following = hermite_normal_form(rows, mod.rank)
        if following == current:
            return current
        current = following


def is_proper(sub: PolySubmodule) -> bool:
    return not sub.is_zero() and not sub.is_full()


@dataclass(frozen=True)
class Candidate:
    """
    Attributes:
        label: Human-readable form, e.g. ``(d + 3)*v``.
        row: Coordinate vector of the generator.
    """

    label: str
    row: Row


def _root_set(mod: ConformalModule) -> list:
    roots = set()
    for row in mod.action.values():
        for poly in row.values():
            free = poly.subs({"l": 0})
            if free and free.variables() <= {PARTIAL}:
                roots.update(rational_roots(free, PARTIAL))
    return sorted(roots)


def candidates(mod: ConformalModule, degree_bound: int) -> list[Candidate]:
    """
    Every module generator, then p(∂)·u for each generator u and each monic
    p of degree 1..``degree_bound`` whose roots lie in the rational root set
    of the λ-free parts of the action polynomials.
    """
    out = [
        Candidate(name, row) for name, row in zip(mod.names, unit_rows(mod.rank))
    ]
    roots = _root_set(mod)
    for i, name in enumerate(mod.names):
        for degree in range(1, degree_bound + 1):
            for chosen in combinations_with_replacement(roots, degree):
                p = MultiPoly.const(1)
                for r in chosen:
                    p = p * (D - r)
                row = tuple(p if k == i else ZERO for k in range(mod.rank))
                out.append(Candidate(f"({p})*{name}", row))
    return out


@dataclass(frozen=True)
class ProbeResult:
    """
    Attributes:
        reducible: A proper action-closed submodule was found.
        witness: The candidate generating it.
        closure: The submodule it generates.
        tried: Number of candidates examined.
    """

    reducible: bool
    witness: Optional[Candidate]
    closure: Optional[PolySubmodule]
    tried: int


def irreducibility_probe(
    mod: ConformalModule,
    degree_bound: int = 3,
    pool: Optional[Sequence[Candidate]] = None,
) -> ProbeResult:
    """
    Search ``pool`` (default :func:`candidates`) for a generator of a proper
    submodule. The witness is the one whose closure has minimal rank, ties
    broken by candidate order. A negative result is evidence of
    irreducibility, not a proof.
    """
    if mod.rank > 2:
        raise DomainError(
            f"{mod.name} has rank {mod.rank}; the probe handles rank ≤ 2"
        )
    _require_instantiated(mod)
    pool = list(pool) if pool is not None else candidates(mod, degree_bound)
    best: Optional[tuple[int, Candidate, PolySubmodule]] = None
    for candidate in pool:
        closure = submodule_closure(mod, [candidate.row])
        if not is_proper(closure):
            continue
        size = len(closure.hnf_basis)
        if best is None or size < best[0]:
            best = (size, candidate, closure)
    if best is None:
        LOGGER.debug(f"no proper submodule of {mod.name} among {len(pool)} candidates")
        return ProbeResult(False, None, None, len(pool))
    return ProbeResult(True, best[1], best[2], len(pool))


def quotient_module(mod: ConformalModule, kill: str) -> ConformalModule:
    """
    Quotient by C[∂]·kill, which must be a submodule.

    :raises DomainError: if some generator acts on ``kill`` outside C[∂]·kill.
    """
    mod.parity(kill)
    for a in mod.algebra.names:
        leaked = set(mod.act(a, kill)) - {kill}
        if leaked:
            raise DomainError(
                f"C[∂]{kill} is not a submodule of {mod.name}: "
                f"{a}_λ {kill} has components on {sorted(leaked)}"
            )
    basis = tuple(b for b in mod.basis if b.name != kill)
    table = {
        (a, u): {w: p for w, p in row.items() if w != kill}
        for (a, u), row in mod.action.items()
        if u != kill
    }
    return ConformalModule(mod.algebra, basis, table, f"{mod.name}/{kill}")
