#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import logging
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, Final, Iterator, List, Optional, Tuple, Union

# Installed packages
from frozendict import frozendict

# Local modules
from sextremal.errors import ConsistencyException, InputException
from sextremal.info.limits import MAX_EXPONENT

log = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Coefficient = Union[int, Fraction]

REGEX_POLYNOMIAL_TERM: Final = re.compile(
    r"(?P<sign>[+-])?\s*(?P<coefficient>\d+(?:/\d+)?)?\s*\*?\s*"
    r"(?P<monomial>x\d+(?:\^\d+)?(?:\s*\*\s*x\d+(?:\^\d+)?)*)?"
)
"""
Regex expression to parse one term of the polynomial text format: '-3/2*x1^2*x3'
The groups are the optional 'sign', the optional 'coefficient' and the optional
'monomial' product.
"""

REGEX_POLYNOMIAL_FACTOR: Final = re.compile(r"x(\d+)(?:\^(\d+))?")


class ExponentCapException(ConsistencyException):
    """Raised when a polynomial would carry an exponent above the supported cap"""

    pass


class ZeroPolynomialException(InputException):
    """Raised when an operation requires a nonzero polynomial"""

    pass


class InvalidLexOrderException(InputException):
    """Raised when a lex order is not a permutation of [n]"""

    pass


class PolynomialParseException(InputException):
    """Raised when the polynomial text format cannot be parsed"""

    pass


@dataclass(frozen=True)
class LexOrder:
    """
    Lexicographic term order given by a permutation of the variables, most
    significant variable first.
    """

    perm: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise InvalidLexOrderException(f"Not a permutation of [n] ({self.perm=})")

    @property
    def n(self) -> int:
        return len(self.perm)

    def key(self, exponents: Exponents) -> Tuple[int, ...]:
        """Sort key: larger keys are larger monomials"""
        return tuple(exponents[variable - 1] for variable in self.perm)

    def mask_key(self, mask: int) -> Tuple[int, ...]:
        """Sort key of the square-free monomial of a mask"""
        return tuple((mask >> (variable - 1)) & 1 for variable in self.perm)

    @staticmethod
    def identity(n: int) -> LexOrder:
        return LexOrder(tuple(range(1, n + 1)))

    @staticmethod
    def parse(text: str) -> LexOrder:
        try:
            return LexOrder(tuple(int(part) for part in text.split(",")))
        except ValueError:
            raise InvalidLexOrderException(f"Expected comma separated variables ({text=})")

    @staticmethod
    def random(n: int, rng: random.Random) -> LexOrder:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        return LexOrder(tuple(perm))

    @staticmethod
    def all(n: int) -> Iterator[LexOrder]:
        for perm in permutations(range(1, n + 1)):
            yield LexOrder(perm)

    def __str__(self) -> str:
        return ",".join(str(variable) for variable in self.perm)


def _clean_terms(terms: Dict[Exponents, Fraction]) -> frozendict:
    return frozendict(
        {exponents: c for exponents, c in terms.items() if c != 0}
    )


@dataclass(frozen=True)
class MultilinearPolynomial:
    """
    Sparse polynomial in the variables x_1, ..., x_n with exact rational coefficients.
    Every exponent is at most 2 and zero coefficients are never stored.
    """

    n: int
    terms: frozendict = field(default_factory=frozendict)
    """Mapping of exponent vectors to nonzero Fraction coefficients."""

    def __post_init__(self):
        for exponents, coefficient in self.terms.items():
            if len(exponents) != self.n:
                raise ConsistencyException(
                    f"Exponent vector has the wrong length ({exponents=}, {self.n=})"
                )
            if any(e > MAX_EXPONENT for e in exponents):
                raise ExponentCapException(
                    f"Exponent above {MAX_EXPONENT=} ({exponents=})"
                )
            if coefficient == 0:
                raise ConsistencyException(f"Zero coefficient stored ({exponents=})")

    @staticmethod
    def from_terms(
        n: int, terms: Dict[Exponents, Coefficient]
    ) -> MultilinearPolynomial:
        return MultilinearPolynomial(
            n, _clean_terms({e: Fraction(c) for e, c in terms.items()})
        )

    @staticmethod
    def zero(n: int) -> MultilinearPolynomial:
        return MultilinearPolynomial(n)

    @staticmethod
    def constant(n: int, value: Coefficient) -> MultilinearPolynomial:
        return MultilinearPolynomial.from_terms(n, {(0,) * n: value})

    @staticmethod
    def monomial(
        exponents: Exponents, coefficient: Coefficient = 1
    ) -> MultilinearPolynomial:
        return MultilinearPolynomial.from_terms(len(exponents), {exponents: coefficient})

    @staticmethod
    def variable(i: int, n: int) -> MultilinearPolynomial:
        return MultilinearPolynomial.monomial(unit_exponents(i, n))

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def __add__(self, other: MultilinearPolynomial) -> MultilinearPolynomial:
        terms: Dict[Exponents, Fraction] = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            terms[exponents] = terms.get(exponents, Fraction(0)) + coefficient
        return MultilinearPolynomial(self.n, _clean_terms(terms))

    def __neg__(self) -> MultilinearPolynomial:
        return MultilinearPolynomial(
            self.n, frozendict({e: -c for e, c in self.terms.items()})
        )

    def __sub__(self, other: MultilinearPolynomial) -> MultilinearPolynomial:
        return self + (-other)

    def __mul__(
        self, other: Union[MultilinearPolynomial, Coefficient]
    ) -> MultilinearPolynomial:
        if not isinstance(other, MultilinearPolynomial):
            return MultilinearPolynomial(
                self.n, _clean_terms({e: c * other for e, c in self.terms.items()})
            )
        return multiply(self, other)

    def __rmul__(self, other: Coefficient) -> MultilinearPolynomial:
        return self * other

    def evaluate(self, point: int) -> Fraction:
        """
        Evaluate at the 0/1 point whose coordinate i is bit i-1 of the mask.
        """
        value = Fraction(0)
        for exponents, coefficient in self.terms.items():
            if all(
                e == 0 or (point >> index) & 1 for index, e in enumerate(exponents)
            ):
                value += coefficient
        return value

    def field_reduce(self) -> MultilinearPolynomial:
        """Replace every x_i^e (e >= 1) by x_i, i.e. reduce by all x_i^2 - x_i"""
        terms: Dict[Exponents, Fraction] = dict()
        for exponents, coefficient in self.terms.items():
            reduced = tuple(min(e, 1) for e in exponents)
            terms[reduced] = terms.get(reduced, Fraction(0)) + coefficient
        return MultilinearPolynomial(self.n, _clean_terms(terms))

    def __str__(self) -> str:
        return format_polynomial(self)


def unit_exponents(i: int, n: int, power: int = 1) -> Exponents:
    return tuple(power if index == i - 1 else 0 for index in range(n))


def multiply(
    a: MultilinearPolynomial, b: MultilinearPolynomial, field_reduce: bool = False
) -> MultilinearPolynomial:
    """
    Multiply two polynomials. With field_reduce exponents above the cap are replaced by
    1 (x_i^e = x_i modulo x_i^2 - x_i), otherwise they raise ExponentCapException.
    """
    terms: Dict[Exponents, Fraction] = dict()
    for exponents_a, coefficient_a in a.terms.items():
        for exponents_b, coefficient_b in b.terms.items():
            exponents = tuple(x + y for x, y in zip(exponents_a, exponents_b))
            if field_reduce and any(e > MAX_EXPONENT for e in exponents):
                exponents = tuple(1 if e > MAX_EXPONENT else e for e in exponents)
            terms[exponents] = (
                terms.get(exponents, Fraction(0)) + coefficient_a * coefficient_b
            )
    return MultilinearPolynomial(a.n, _clean_terms(terms))


def sorted_terms(
    p: MultilinearPolynomial, order: LexOrder
) -> List[Tuple[Exponents, Fraction]]:
    """Terms from the largest to the smallest monomial"""
    return sorted(p.terms.items(), key=lambda term: order.key(term[0]), reverse=True)


def _format_monomial(exponents: Exponents) -> str:
    return "*".join(
        f"x{index + 1}" if e == 1 else f"x{index + 1}^{e}"
        for index, e in enumerate(exponents)
        if e > 0
    )


def format_polynomial(p: MultilinearPolynomial, order: Optional[LexOrder] = None) -> str:
    """
    Text format '±c*x1^e1*...', terms sorted from the largest monomial (identity lex
    order by default). Unit coefficients and exponents are omitted.
    """
    if p.is_zero():
        return "0"
    if order is None:
        order = LexOrder.identity(p.n)
    parts: List[str] = []
    for exponents, coefficient in sorted_terms(p, order):
        monomial = _format_monomial(exponents)
        magnitude = abs(coefficient)
        if len(monomial) == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        sign = "-" if coefficient < 0 else "+"
        if len(parts) == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def parse_polynomial(text: str, n: int) -> MultilinearPolynomial:
    """Parse the text format written by format_polynomial"""
    content = text.strip()
    if content == "0":
        return MultilinearPolynomial.zero(n)
    result = MultilinearPolynomial.zero(n)
    position = 0
    while position < len(content):
        match = REGEX_POLYNOMIAL_TERM.match(content, position)
        if (
            match is None
            or match.end() == position
            or (match.group("coefficient") is None and match.group("monomial") is None)
            or (position > 0 and match.group("sign") is None)
        ):
            raise PolynomialParseException(f"Unable to parse term ({text=}, {position=})")
        coefficient = Fraction(match.group("coefficient") or 1)
        if match.group("sign") == "-":
            coefficient = -coefficient
        exponents = [0] * n
        for factor in REGEX_POLYNOMIAL_FACTOR.finditer(match.group("monomial") or ""):
            variable = int(factor.group(1))
            if not 1 <= variable <= n:
                raise PolynomialParseException(f"Variable out of range ({variable=}, {n=})")
            exponents[variable - 1] += int(factor.group(2) or 1)
        if any(e > MAX_EXPONENT for e in exponents):
            raise PolynomialParseException(f"Exponent above {MAX_EXPONENT=} ({text=})")
        result = result + MultilinearPolynomial.monomial(tuple(exponents), coefficient)
        position = match.end()
        while position < len(content) and content[position] == " ":
            position += 1
    return result
