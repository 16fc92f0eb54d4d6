"""
Truncated annihilation Lie superalgebras.

Lie(R)+ has basis a_(n) for generators a of R and n ≥ 0, with

    [a_(m), b_(n)] = Σ_j C(m, j) (a_(j) b)_(m+n-j),   (∂a)_(n) = -n a_(n-1).

The extended algebra Lie(R)^e adjoins ∂ with [∂, a_(n)] = -n a_(n-1). Only
generators of level at most the cap N are kept, and a bracket is stored only
when the two levels add up to at most N, so every stored bracket is exact.
"""

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Mapping

from conflab.core.exceptions import DomainError
from conflab.core.lcsa import ConformalSuperAlgebra, Element, Parity, jth_products, sign
from conflab.core.polyring import MultiPoly, ZERO
from conflab.core.structures import Report, Residual
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)


@dataclass(frozen=True, order=True)
class AnnGenerator:
    """
    Attributes:
        base: Generator of the conformal algebra, or ``∂`` for the derivation.
        level: n in a_(n); -1 for the derivation.
        parity: Parity of the base generator.
    """

    base: str
    level: int
    parity: Parity = field(default=Parity.EVEN, compare=False)

    @property
    def is_derivation(self) -> bool:
        return self.level < 0

    @property
    def weight(self) -> int:
        """Level used for the truncation filter; ∂ has weight 0."""
        return max(self.level, 0)

    def __str__(self) -> str:
        return self.base if self.is_derivation else f"{self.base}_({self.level})"


DERIVATION = AnnGenerator("∂", -1)

Combination = dict[AnnGenerator, MultiPoly]


def _add(target: Combination, key: AnnGenerator, value: MultiPoly) -> None:
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def combine(*parts: tuple[MultiPoly, Mapping[AnnGenerator, MultiPoly]]) -> Combination:
    """Σ coefficient · combination."""
    out: Combination = {}
    for coefficient, combination in parts:
        coefficient = MultiPoly.coerce(coefficient)
        for key, value in combination.items():
            _add(out, key, value * coefficient)
    return out


def format_combination(combination: Mapping[AnnGenerator, MultiPoly]) -> str:
    if not combination:
        return "0"
    return " + ".join(f"({c}){g}" for g, c in sorted(combination.items()))


def element_at_level(
    alg: ConformalSuperAlgebra, elem: Element, n: int
) -> Combination:
    """
    (Σ p_k(∂) c_k)_(n), using (∂^r c)_(n) = (-1)^r n!/(n-r)! c_(n-r).
    """
    out: Combination = {}
    for name, poly in elem.coordinates.items():
        par = alg.parity(name)
        for r, coefficient in poly.coefficients("d").items():
            if r > n:
                continue
            factor = (-1) ** r * factorial(n) // factorial(n - r)
            _add(out, AnnGenerator(name, n - r, par), coefficient.scale(factor))
    return out


@dataclass
class TruncatedLieSuper:
    """
    Attributes:
        algebra: The conformal superalgebra R.
        cap: Truncation level N.
        extended: Whether ∂ is adjoined.
        generators: All a_(n) with n ≤ N, then ∂ if extended.
        table: Stored brackets ``(g, h) -> [g, h]``.
    """

    algebra: ConformalSuperAlgebra
    cap: int
    extended: bool
    generators: tuple[AnnGenerator, ...]
    table: dict[tuple[AnnGenerator, AnnGenerator], Combination]

    def within_cap(self, g: AnnGenerator, h: AnnGenerator) -> bool:
        return g.weight + h.weight <= self.cap

    def bracket(self, g: AnnGenerator, h: AnnGenerator) -> Combination:
        try:
            return self.table[(g, h)]
        except KeyError:
            raise DomainError(f"[{g}, {h}] lies beyond the truncation level {self.cap}")

    def bracket_combinations(
        self, x: Mapping[AnnGenerator, MultiPoly], y: Mapping[AnnGenerator, MultiPoly]
    ) -> Combination:
        parts = []
        for g, cg in x.items():
            for h, ch in y.items():
                parts.append((cg * ch, self.bracket(g, h)))
        return combine(*parts)

    def replace_bracket(
        self, g: AnnGenerator, h: AnnGenerator, value: Mapping[AnnGenerator, MultiPoly]
    ) -> "TruncatedLieSuper":
        """Copy with one stored bracket overwritten, leaving its mirror alone."""
        table = dict(self.table)
        table[(g, h)] = dict(value)
        return TruncatedLieSuper(
            self.algebra, self.cap, self.extended, self.generators, table
        )

    def generator(self, base: str, level: int) -> AnnGenerator:
        if base == DERIVATION.base:
            return DERIVATION
        return AnnGenerator(base, level, self.algebra.parity(base))


def _raw_bracket(
    alg: ConformalSuperAlgebra,
    products: Mapping[tuple[str, str], Mapping[int, Element]],
    g: AnnGenerator,
    h: AnnGenerator,
) -> Combination:
    if g.is_derivation and h.is_derivation:
        return {}
    if g.is_derivation:
        if h.level == 0:
            return {}
        return {AnnGenerator(h.base, h.level - 1, h.parity): MultiPoly.const(-h.level)}
    if h.is_derivation:
        if g.level == 0:
            return {}
        return {AnnGenerator(g.base, g.level - 1, g.parity): MultiPoly.const(g.level)}
    m, n = g.level, h.level
    parts = []
    for j, elem in products[(g.base, h.base)].items():
        if j > m:
            continue
        at_level = element_at_level(alg, elem, m + n - j)
        parts.append((MultiPoly.const(comb(m, j)), at_level))
    return combine(*parts)


def build_annihilation(
    alg: ConformalSuperAlgebra, cap: int, extended: bool = False
) -> TruncatedLieSuper:
    """
    Truncation of Lie(R)+ (or Lie(R)^e when ``extended``) at level ``cap``.
    """
    if cap < 0:
        raise DomainError("the truncation level must be nonnegative")
    gens = [
        AnnGenerator(b.name, n, b.parity) for b in alg.basis for n in range(cap + 1)
    ]
    if extended:
        gens.append(DERIVATION)
    products = {(i, j): jth_products(alg, i, j) for i in alg.names for j in alg.names}
    table = {}
    for g in gens:
        for h in gens:
            if g.weight + h.weight <= cap:
                table[(g, h)] = _raw_bracket(alg, products, g, h)
    LOGGER.debug(f"Lie({alg.name}) truncated at {cap}: {len(table)} brackets")
    return TruncatedLieSuper(alg, cap, extended, tuple(gens), table)


def _sign(g: AnnGenerator, h: AnnGenerator) -> int:
    return sign(g.parity, h.parity)


def check_antisymmetry(lie: TruncatedLieSuper) -> Report:
    """[g, h] = -(-1)^{|g||h|}[h, g] for every stored pair."""
    residuals = []
    for (g, h), value in lie.table.items():
        mirror = lie.table.get((h, g))
        if mirror is None or g > h:
            continue
        diff = combine((1, value), (_sign(g, h), mirror))
        for target, poly in sorted(diff.items()):
            residuals.append(Residual((str(g), str(h), str(target)), poly))
    return Report.from_residuals("antisymmetry", f"Lie({lie.algebra.name})", residuals)


def check_super_jacobi_filtered(lie: TruncatedLieSuper) -> Report:
    """
    [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] for every generator triple
    whose levels add up to at most the cap; other triples are skipped and
    counted.
    """
    residuals = []
    checked = skipped = 0
    for x in lie.generators:
        for y in lie.generators:
            for z in lie.generators:
                if x.weight + y.weight + z.weight > lie.cap:
                    skipped += 1
                    continue
                checked += 1
                value = combine(
                    (1, lie.bracket_combinations({x: 1}, lie.bracket(y, z))),
                    (-1, lie.bracket_combinations(lie.bracket(x, y), {z: 1})),
                    (
                        -_sign(x, y),
                        lie.bracket_combinations({y: 1}, lie.bracket(x, z)),
                    ),
                )
                for target, poly in sorted(value.items()):
                    residuals.append(
                        Residual((str(x), str(y), str(z), str(target)), poly)
                    )
    return Report.from_residuals(
        "super_jacobi",
        f"Lie({lie.algebra.name})",
        residuals,
        cap=lie.cap,
        triples=checked,
        skipped=skipped,
    )
