"""
Exact polynomial and truncated power series arithmetic.

This module provides the integer polynomials used to write down rational
generating functions and the truncated formal power series with rational
coefficients used to expand algebraic ones. No floating point value is ever
produced; every coefficient is a Python ``int`` or ``fractions.Fraction``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    """Exception raised for series operations that are undefined."""

    pass


class IntegrityError(ArithmeticError):
    """Exception raised when an expansion yields a non-integer or negative count."""

    pass


def _strip(coefficients: Iterable[int]) -> Tuple[int, ...]:
    values = list(coefficients)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPoly:
    """
    Polynomial with integer coefficients, lowest degree first.

    The coefficient tuple is normalised on construction so that it never
    carries trailing zeros; the zero polynomial has an empty tuple.
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for c in self.coefficients:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"IntPoly coefficients must be int, got {c!r}")
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coefficient: int, degree: int) -> "IntPoly":
        if degree < 0:
            raise ValueError(f"Negative degree {degree}")
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def constant_term(self) -> int:
        return self.coefficients[0] if self.coefficients else 0

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def _coerce(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        size = max(len(self.coefficients), len(rhs.coefficients))
        return IntPoly(
            tuple(self.coefficient(i) + rhs.coefficient(i) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int) -> "IntPoly":
        return IntPoly.constant(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return IntPoly()
        product = [0] * (len(self.coefficients) + len(rhs.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(rhs.coefficients):
                product[i + j] += a * b
        return IntPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        return integer_pow(self, exponent)

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def to_series(self, order: int) -> "Series":
        return Series.from_ints(self.coefficients, order)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                body = f"{c}"
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if c == 1 else ("-" + power if c == -1 else f"{c}{power}")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")


def integer_pow(poly: IntPoly, exponent: int) -> IntPoly:
    """
    Raise a polynomial to a non-negative integer power by repeated squaring.

    Args:
        poly: Base polynomial
        exponent: Non-negative exponent

    Returns:
        poly ** exponent (the constant 1 for exponent 0)
    """
    if exponent < 0:
        raise ValueError(f"Negative exponent {exponent} for an integer polynomial")
    result = IntPoly.constant(1)
    base = poly
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


@dataclass(frozen=True)
class Series:
    """
    Formal power series truncated after x^order.

    ``coefficients`` always holds exactly ``order + 1`` rational values.
    Binary operations truncate to the smaller order of their operands.
    """

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise SeriesError("A series needs at least the constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def from_ints(cls, values: Sequence[Scalar], order: int) -> "Series":
        if order < 0:
            raise ValueError(f"Negative truncation order {order}")
        padded = list(values[: order + 1]) + [0] * max(0, order + 1 - len(values))
        return cls(tuple(Fraction(v) for v in padded))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Series":
        return cls.from_ints([value], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.from_ints([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(
                f"Cannot raise truncation order from {self.order} to {order}"
            )
        return Series(self.coefficients[: order + 1])

    def padded(self, order: int) -> "Series":
        """Copy with zeros appended up to ``order``; lower orders truncate."""
        if order <= self.order:
            return self.truncate(order)
        return Series(self.coefficients + (Fraction(0),) * (order - self.order))

    def _coerce(self, other: Union["Series", IntPoly, Scalar]) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, IntPoly):
            return other.to_series(self.order)
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return NotImplemented

    def __add__(self, other: Union["Series", IntPoly, Scalar]) -> "Series":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        order = min(self.order, rhs.order)
        return Series(tuple(self[i] + rhs[i] for i in range(order + 1)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["Series", IntPoly, Scalar]) -> "Series":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Union[IntPoly, Scalar]) -> "Series":
        return (-self) + other

    def __mul__(self, other: Union["Series", IntPoly, Scalar]) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series(tuple(c * other for c in self.coefficients))
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        order = min(self.order, rhs.order)
        product = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] += a * rhs[j]
        return Series(tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Series", IntPoly, Scalar]) -> "Series":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise SeriesError("Division of a series by zero")
            return Series(tuple(c / other for c in self.coefficients))
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return series_div(self, rhs)

    def shift_down(self) -> "Series":
        """
        Divide by x.

        The constant coefficient must vanish; the truncation order drops by one.
        """
        if self[0] != 0:
            raise SeriesError(
                f"Cannot divide by x: constant coefficient is {self[0]}"
            )
        if self.order == 0:
            raise SeriesError("Cannot divide an order-0 series by x")
        return Series(self.coefficients[1:])

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series((Fraction(0),))
        return Series(tuple(i * self[i] for i in range(1, self.order + 1)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def to_ints(self) -> List[int]:
        """Coefficients as integers; raises SeriesError if any is fractional."""
        if not self.is_integral():
            bad = next(i for i, c in enumerate(self.coefficients) if c.denominator != 1)
            raise SeriesError(
                f"Coefficient of x^{bad} is not an integer: {self.coefficients[bad]}"
            )
        return [c.numerator for c in self.coefficients]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)


def series_div(numerator: Series, denominator: Series) -> Series:
    """
    Quotient of two series, truncated to the smaller of their orders.

    Args:
        numerator: Dividend series
        denominator: Divisor series with non-zero constant coefficient

    Returns:
        Series q with q * denominator == numerator to the common order

    Raises:
        SeriesError: If the divisor's constant coefficient is zero
    """
    d0 = denominator[0]
    if d0 == 0:
        raise SeriesError("Divisor has zero constant coefficient")
    order = min(numerator.order, denominator.order)
    quotient: List[Fraction] = []
    for n in range(order + 1):
        acc = numerator[n]
        for i in range(1, n + 1):
            if denominator[i]:
                acc -= denominator[i] * quotient[n - i]
        quotient.append(acc / d0)
    return Series(tuple(quotient))


def series_sqrt(s: Series) -> Series:
    """
    Square root of a series with constant coefficient 1.

    Uses Newton's iteration r <- (r + s / r) / 2, doubling the number of
    correct coefficients per step. The root returned is the one with
    constant coefficient 1.

    Raises:
        SeriesError: If the constant coefficient of ``s`` is not 1
    """
    if s[0] != 1:
        raise SeriesError(
            f"Square root requires constant coefficient 1, got {s[0]}"
        )
    target = s.order
    root = Series((Fraction(1),))
    precision = 1
    steps = 0
    while precision < target + 1:
        precision = min(2 * precision, target + 1)
        guess = root.padded(precision - 1)
        root = (guess + series_div(s.truncate(precision - 1), guess)) * Fraction(1, 2)
        steps += 1
    logger.debug(f"Series square root to order {target} in {steps} Newton steps")
    return root
