"""
Exact multivariate polynomials over the rationals, backed by ``sympy.Poly``
over ``QQ``.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by the global
variable order. The term map of a polynomial sends monomials to nonzero
``Fraction`` coefficients; equality and hashing go through it, so the
generator order sympy happens to carry never matters. Instances are immutable.
"""

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from sympy import QQ, Poly, Rational, Symbol

from conflab.core.exceptions import DomainError, UnsupportedOperationError
from conflab.core.polyring.variables import PARTIAL, is_valid_name, var_key

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]
PolyLike = Union["MultiPoly", int, Fraction]

ONE_MONOMIAL: Monomial = ()


@lru_cache(maxsize=None)
def symbol(name: str) -> Symbol:
    return Symbol(name)


def to_rational(c: Scalar) -> Rational:
    c = Fraction(c)
    return Rational(c.numerator, c.denominator)


def to_fraction(c) -> Fraction:
    """A sympy rational (or a ``QQ`` element) as a ``Fraction``."""
    if not isinstance(c, Rational):
        c = QQ.to_sympy(c)
    return Fraction(int(c.p), int(c.q))


def _mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _mono_sort_key(mono: Monomial):
    return (-_mono_degree(mono), [(var_key(v), -e) for v, e in mono])


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _to_poly(terms: Mapping[Monomial, Scalar], names: Sequence[str]) -> Poly:
    # sympy needs at least one generator, even for constants
    gens = [symbol(n) for n in names] or [symbol(PARTIAL)]
    position = {n: i for i, n in enumerate(names)}
    rep: dict[tuple[int, ...], Rational] = {}
    for mono, coef in terms.items():
        exps = [0] * len(gens)
        for v, e in mono:
            exps[position[v]] += e
        key = tuple(exps)
        rep[key] = rep.get(key, 0) + to_rational(coef)
    return Poly.from_dict(rep, *gens, domain=QQ)


class MultiPoly:
    """
    Exact polynomial in the reserved indeterminates ``d`` (∂), ``l`` (λ),
    ``m`` (μ) and any number of named parameters.

    Equality is structural: two polynomials are equal iff their term maps are.
    Scalars (``int`` and ``Fraction``) are accepted wherever a polynomial is.
    """

    __slots__ = ("_poly", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        terms = terms or {}
        names = sorted({v for mono in terms for v, _ in mono}, key=var_key)
        self._poly = _to_poly(terms, names)
        self._terms = None
        self._hash = None

    @classmethod
    def from_poly(cls, poly: Poly) -> "MultiPoly":
        """Wrap a sympy polynomial whose generators are valid variable names."""
        for gen in poly.gens:
            if not isinstance(gen, Symbol) or not is_valid_name(gen.name):
                raise DomainError(f"invalid variable name '{gen}'")
        out = cls.__new__(cls)
        out._poly = poly if poly.domain == QQ else poly.set_domain(QQ)
        out._terms = None
        out._hash = None
        return out

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        if not is_valid_name(name):
            raise DomainError(f"invalid variable name '{name}'")
        if power == 0:
            return cls.const(1)
        return cls({((name, power),): 1})

    @classmethod
    def coerce(cls, value: PolyLike) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.const(value)
        raise TypeError(f"cannot use {type(value).__name__} as a polynomial")

    def as_poly(self, names: Sequence[str] | None = None) -> Poly:
        """
        The underlying ``sympy.Poly``, optionally re-expressed over the
        generators ``names`` (which must cover every variable).
        """
        if names is None:
            return self._poly
        missing = self.variables() - set(names)
        if missing:
            raise DomainError(f"{self} mentions {sorted(missing)} outside {names}")
        return _to_poly(self.terms, list(names))

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        if self._terms is None:
            names = [gen.name for gen in self._poly.gens]
            terms = {}
            for exps, coef in self._poly.terms():
                if coef:
                    pairs = ((n, e) for n, e in zip(names, exps) if e)
                    mono = tuple(sorted(pairs, key=lambda item: var_key(item[0])))
                    terms[mono] = to_fraction(coef)
            self._terms = terms
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return not self._poly.is_zero

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def is_constant(self) -> bool:
        return self._poly.is_ground

    def constant_value(self) -> Fraction:
        """
        The value of a constant polynomial.

        :raises DomainError: if the polynomial mentions any variable.
        """
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self.terms.get(ONE_MONOMIAL, Fraction(0))

    def variables(self) -> frozenset[str]:
        return frozenset(v for mono in self.terms for v, _ in mono)

    def degree(self, var: str | None = None) -> int:
        """
        Total degree, or the degree in ``var``. The zero polynomial has degree -1.
        """
        if self.is_zero():
            return -1
        if var is None:
            return self._poly.total_degree()
        if symbol(var) not in self._poly.gens:
            return 0
        return self._poly.degree(symbol(var))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: PolyLike) -> "MultiPoly":
        return MultiPoly.from_poly(self._poly + MultiPoly.coerce(other)._poly)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly.from_poly(-self._poly)

    def __sub__(self, other: PolyLike) -> "MultiPoly":
        return MultiPoly.from_poly(self._poly - MultiPoly.coerce(other)._poly)

    def __rsub__(self, other: PolyLike) -> "MultiPoly":
        return MultiPoly.coerce(other) - self

    def __mul__(self, other: PolyLike) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return MultiPoly.from_poly(self._poly * MultiPoly.coerce(other)._poly)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "MultiPoly":
        return MultiPoly.from_poly(self._poly.mul_ground(to_rational(c)))

    def __truediv__(self, c: Scalar) -> "MultiPoly":
        if isinstance(c, MultiPoly):
            c = c.constant_value()
        if Fraction(c) == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / Fraction(c))

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise DomainError("polynomial exponents must be nonnegative integers")
        return MultiPoly.from_poly(self._poly.pow(n))

    def coeff(self, var: str, k: int) -> "MultiPoly":
        """
        Coefficient of ``var**k``; the result does not mention ``var``.
        """
        return self.coefficients(var).get(k, MultiPoly())

    def coefficients(self, var: str) -> dict[int, "MultiPoly"]:
        """
        All nonzero coefficients with respect to ``var``, keyed by power.
        """
        grouped: dict[int, dict] = {}
        for mono, c in self.terms.items():
            k = dict(mono).get(var, 0)
            rest = tuple((v, e) for v, e in mono if v != var)
            grouped.setdefault(k, {})[rest] = c
        return {k: MultiPoly(t) for k, t in sorted(grouped.items())}

    def collect(self, variables: Iterable[str]) -> dict[Monomial, "MultiPoly"]:
        """
        Group terms by their monomial in ``variables``; the values are
        polynomials in the remaining variables.
        """
        chosen = frozenset(variables)
        grouped: dict[Monomial, dict] = {}
        for mono, c in self.terms.items():
            inner = tuple((v, e) for v, e in mono if v in chosen)
            outer = tuple((v, e) for v, e in mono if v not in chosen)
            grouped.setdefault(inner, {})[outer] = c
        return {k: MultiPoly(t) for k, t in grouped.items()}

    def subs(self, mapping: Mapping[str, PolyLike]) -> "MultiPoly":
        """
        Simultaneous substitution of variables by polynomials.
        """
        images = {v: MultiPoly.coerce(p) for v, p in mapping.items()}
        if not images or not (self.variables() & images.keys()):
            return self
        powers: dict[tuple[str, int], MultiPoly] = {}
        result = MultiPoly()
        for mono, c in self.terms.items():
            kept = {}
            term = MultiPoly.const(c)
            for v, e in mono:
                if v in images:
                    if (v, e) not in powers:
                        powers[(v, e)] = images[v] ** e
                    term = term * powers[(v, e)]
                else:
                    kept[v] = e
            if kept:
                term = term * MultiPoly({tuple(kept.items()): 1})
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> "MultiPoly":
        return self.subs({v: MultiPoly.const(x) for v, x in values.items()})

    def diff(self, var: str) -> "MultiPoly":
        if symbol(var) not in self._poly.gens:
            return MultiPoly()
        return MultiPoly.from_poly(self._poly.diff(symbol(var)))

    def leading_coefficient(self, var: str) -> "MultiPoly":
        return self.coeff(var, self.degree(var))

    def divmod(self, divisor: "MultiPoly", var: str) -> tuple["MultiPoly", "MultiPoly"]:
        """
        Division with remainder in ``var``. The divisor's leading coefficient
        in ``var`` must be a nonzero rational constant.

        :return: ``(quotient, remainder)``, the remainder of lower degree in
            ``var`` than the divisor.
        :raises UnsupportedOperationError: for a non-constant leading coefficient.
        """
        divisor = MultiPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.leading_coefficient(var)
        if not lead.is_constant():
            raise UnsupportedOperationError(
                f"leading coefficient {lead} of {divisor} in '{var}' is not a unit"
            )
        # ``var`` first: sympy divides recursively in the leading generator
        others = (self.variables() | divisor.variables()) - {var}
        names = [var, *sorted(others, key=var_key)]
        quotient, remainder = self.as_poly(names).div(divisor.as_poly(names))
        return MultiPoly.from_poly(quotient), MultiPoly.from_poly(remainder)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: _mono_sort_key(item[0]))

    def format(self) -> str:
        """
        Deterministic ASCII rendering accepted by :func:`parse`, highest total
        degree first.
        """
        if self.is_zero():
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if not factors:
                body = _format_coefficient(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_format_coefficient(mag)] + factors)
            if i == 0:
                pieces.append(f"-{body}" if sign == "-" else body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()!r})"


def arith(p: PolyLike, q: PolyLike, kind: str) -> MultiPoly:
    """
    Dispatch one ring operation by name: ``add``, ``sub``, ``mul``, ``neg``
    (ignores ``q``) or ``scale`` (``q`` a rational).
    """
    p = MultiPoly.coerce(p)
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    if kind == "neg":
        return -p
    if kind == "scale":
        return p.scale(MultiPoly.coerce(q).constant_value())
    raise DomainError(f"unknown arithmetic kind '{kind}'")


def substitute(p: MultiPoly, var: str, image: PolyLike) -> MultiPoly:
    return p.subs({var: image})


def coeff_in_var(p: MultiPoly, var: str, k: int) -> MultiPoly:
    return p.coeff(var, k)


def poly_divide(p: MultiPoly, q: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    return p.divmod(q, var)


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
D = MultiPoly.var("d")
L = MultiPoly.var("l")
M = MultiPoly.var("m")
