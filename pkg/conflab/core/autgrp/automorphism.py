"""
Grading-preserving C[∂]-module automorphisms of a rank-(2+1) algebra on
A, B (even) and X (odd), stored in the normal shape

    σ(A) = k1·A + g(∂)·B,  σ(B) = k2·B,  σ(X) = k3·X

or the constant swap σ(A) = s·B, σ(B) = t·A, σ(X) = k3·X.
"""

from dataclasses import dataclass
from fractions import Fraction

from conflab.core.exceptions import DomainError, ShapeError
from conflab.core.lcsa import ConformalSuperAlgebra, Element, bracket_eval
from conflab.core.polyring import PARTIAL, MultiPoly, ZERO
from conflab.core.structures import Report, Residual
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)

EVEN = ("A", "B")
NAMES = ("A", "B", "X")

Block = tuple[tuple[MultiPoly, MultiPoly], tuple[MultiPoly, MultiPoly]]


def _nonzero_constant(poly: MultiPoly) -> bool:
    return bool(poly) and poly.is_constant()


@dataclass(frozen=True)
class GradedAutomorphism:
    """
    Attributes:
        even: Rows of the even block; ``even[i][k]`` is the B- or A-coordinate
            of the image of the i-th even generator.
        h: The constant σ(X) = h·X.
    """

    even: Block
    h: Fraction

    def __post_init__(self):
        block = tuple(tuple(MultiPoly.coerce(p) for p in row) for row in self.even)
        if len(block) != 2 or any(len(row) != 2 for row in block):
            raise ShapeError("the even block must be 2x2")
        for row in block:
            for p in row:
                if p.variables() - {PARTIAL}:
                    raise ShapeError(f"even block entry {p} is not in C[∂]")
        h = MultiPoly.coerce(self.h)
        if not _nonzero_constant(h):
            raise ShapeError(f"the odd block must be a nonzero constant, got {h}")
        (a, g), (c, k2) = block
        triangular = not c and _nonzero_constant(a) and _nonzero_constant(k2)
        swap = not a and not k2 and _nonzero_constant(g) and _nonzero_constant(c)
        if not (triangular or swap):
            raise ShapeError(
                "the even block must be upper triangular with constant diagonal "
                f"or a constant swap, got {[[str(p) for p in r] for r in block]}"
            )
        object.__setattr__(self, "even", block)
        object.__setattr__(self, "h", h.constant_value())

    @classmethod
    def triangular(cls, k1, k2, k3, g=0) -> "GradedAutomorphism":
        return cls(((MultiPoly.coerce(k1), MultiPoly.coerce(g)), (ZERO, k2)), k3)

    @classmethod
    def swap(cls, s, t, k3=1) -> "GradedAutomorphism":
        return cls(((ZERO, MultiPoly.coerce(s)), (MultiPoly.coerce(t), ZERO)), k3)

    @classmethod
    def identity(cls) -> "GradedAutomorphism":
        return cls.triangular(1, 1, 1)

    @property
    def is_swap(self) -> bool:
        return not self.even[0][0]

    def _diagonal(self, i: int) -> Fraction:
        if self.is_swap:
            raise ShapeError("a swap has no diagonal constants")
        return self.even[i][i].constant_value()

    @property
    def k1(self) -> Fraction:
        return self._diagonal(0)

    @property
    def k2(self) -> Fraction:
        return self._diagonal(1)

    @property
    def k3(self) -> Fraction:
        return self.h

    @property
    def g(self) -> MultiPoly:
        if self.is_swap:
            raise ShapeError("a swap has no g(∂) entry")
        return self.even[0][1]

    def entry(self, i: str, t: str) -> MultiPoly:
        """Coordinate of t in σ(i)."""
        if i == "X" or t == "X":
            return MultiPoly.const(self.h) if i == t else ZERO
        return self.even[EVEN.index(i)][EVEN.index(t)]

    def image(self, alg: ConformalSuperAlgebra, name: str) -> Element:
        return alg.element({t: self.entry(name, t) for t in NAMES})

    def describe(self) -> str:
        parts = []
        for i in NAMES:
            terms = [f"({self.entry(i, t)}){t}" for t in NAMES if self.entry(i, t)]
            parts.append(f"{i} -> {' + '.join(terms)}")
        return ", ".join(parts)

    def __str__(self) -> str:
        return self.describe()


def _check_basis(alg: ConformalSuperAlgebra) -> None:
    parities = {b.name: b.is_odd for b in alg.basis}
    if parities != {"A": False, "B": False, "X": True}:
        raise DomainError(f"{alg.name} is not a rank (2+1) algebra on A, B | X")


def is_automorphism(
    alg: ConformalSuperAlgebra, sigma: GradedAutomorphism
) -> Report:
    """
    σ([i_λ j]) = [σ(i)_λ σ(j)] for every pair of generators. The left side is
    Σ_k Q_ij^k(∂,λ) σ_kt(∂) on each target t.

    :raises DomainError: if ``alg`` is not on the basis A, B | X.
    """
    _check_basis(alg)
    images = {n: sigma.image(alg, n) for n in NAMES}
    residuals = []
    for i in NAMES:
        for j in NAMES:
            mapped: dict[str, MultiPoly] = {}
            for k, q in alg.entry(i, j).items():
                for t in NAMES:
                    mapped[t] = mapped.get(t, ZERO) + q * sigma.entry(k, t)
            bracket = bracket_eval(alg, images[i], images[j])
            for t in NAMES:
                diff = mapped.get(t, ZERO) - bracket.get(t, ZERO)
                if diff:
                    residuals.append(Residual((i, j, t), diff))
    return Report.from_residuals(
        "automorphism", alg.name, residuals, sigma=sigma.describe()
    )


def _matmul(left: Block, right: Block) -> Block:
    return tuple(
        tuple(
            sum((left[i][k] * right[k][j] for k in range(2)), ZERO) for j in range(2)
        )
        for i in range(2)
    )


def compose(
    sigma: GradedAutomorphism, tau: GradedAutomorphism
) -> GradedAutomorphism:
    """
    σ∘τ. Images are rows, so the even block of σ∘τ is M_τ·M_σ.

    :raises ShapeError: when the product leaves both stored shapes, as for a
        swap composed with a triangular block whose g is nonzero.
    """
    return GradedAutomorphism(_matmul(tau.even, sigma.even), sigma.h * tau.h)


def invert(sigma: GradedAutomorphism) -> GradedAutomorphism:
    if sigma.is_swap:
        s = sigma.even[0][1].constant_value()
        t = sigma.even[1][0].constant_value()
        return GradedAutomorphism.swap(1 / t, 1 / s, 1 / sigma.h)
    k1, k2 = sigma.k1, sigma.k2
    return GradedAutomorphism.triangular(
        1 / k1, 1 / k2, 1 / sigma.h, sigma.g.scale(-1 / (k1 * k2))
    )


def same_map(sigma: GradedAutomorphism, tau: GradedAutomorphism) -> bool:
    return sigma.even == tau.even and sigma.h == tau.h


def is_identity(sigma: GradedAutomorphism) -> bool:
    return same_map(sigma, GradedAutomorphism.identity())

