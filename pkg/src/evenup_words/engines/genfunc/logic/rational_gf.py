"""
Closed-form rational generating functions for the eight word classes.

Each builder evaluates the floor and ceiling exponents for a concrete k,
combines any standalone additive terms over a common denominator and
returns one numerator/denominator pair. Coefficients are then read off with
the linear recurrence q0 a_n = p_n - sum_{i>=1} q_i a_{n-i}.

The module also carries the identities used to verify the cyclic even-up
result: the telescoper G(i), the summands it collapses, the per-ending-letter
generating functions and the letter-insertion recurrence.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple, Union

from ....shared_libs.exact_algebra import IntegrityError, IntPoly, Series, series_div
from ....shared_libs.words import CountTable, Parity, Strictness, Topology, WordClass

logger = logging.getLogger(__name__)

X = IntPoly.x()
ONE_PLUS_X = IntPoly((1, 1))
ONE_MINUS_X = IntPoly((1, -1))


@dataclass(frozen=True)
class RationalGF:
    """
    Rational generating function p(x) / q(x) with q(0) > 0.

    The sign is normalised on construction so that the denominator's constant
    term is positive; no other simplification is attempted.
    """

    numerator: IntPoly
    denominator: IntPoly

    def __post_init__(self) -> None:
        q0 = self.denominator.constant_term
        if q0 == 0:
            raise ValueError(
                f"Denominator {self.denominator} has zero constant term"
            )
        if q0 < 0:
            object.__setattr__(self, "numerator", -self.numerator)
            object.__setattr__(self, "denominator", -self.denominator)

    @classmethod
    def of(cls, value: Union[IntPoly, int]) -> "RationalGF":
        if isinstance(value, int):
            value = IntPoly.constant(value)
        return cls(value, IntPoly.constant(1))

    def _coerce(self, other: Union["RationalGF", IntPoly, int]) -> "RationalGF":
        if isinstance(other, RationalGF):
            return other
        if isinstance(other, (IntPoly, int)):
            return RationalGF.of(other)
        return NotImplemented

    def __add__(self, other: Union["RationalGF", IntPoly, int]) -> "RationalGF":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if rhs.denominator == self.denominator:
            return RationalGF(self.numerator + rhs.numerator, self.denominator)
        return RationalGF(
            self.numerator * rhs.denominator + rhs.numerator * self.denominator,
            self.denominator * rhs.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.numerator, self.denominator)

    def __sub__(self, other: Union["RationalGF", IntPoly, int]) -> "RationalGF":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Union[IntPoly, int]) -> "RationalGF":
        return RationalGF.of(other) - self

    def __mul__(self, other: Union["RationalGF", IntPoly, int]) -> "RationalGF":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return RationalGF(
            self.numerator * rhs.numerator, self.denominator * rhs.denominator
        )

    __rmul__ = __mul__

    def to_series(self, order: int) -> Series:
        return series_div(
            self.numerator.to_series(order), self.denominator.to_series(order)
        )

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def expand_gf(gf: RationalGF, n_max: int) -> List[int]:
    """
    Coefficients a_0..a_{n_max} of a rational generating function.

    Args:
        gf: Generating function to expand
        n_max: Last index to compute (>= 0)

    Returns:
        List of n_max + 1 exact non-negative integers

    Raises:
        IntegrityError: If a coefficient is fractional or negative
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    p = gf.numerator
    q = gf.denominator.coefficients
    q0 = q[0]
    values: List[int] = []
    for n in range(n_max + 1):
        acc = p.coefficient(n)
        for i in range(1, min(n, len(q) - 1) + 1):
            acc -= q[i] * values[n - i]
        value, remainder = divmod(acc, q0)
        if remainder:
            raise IntegrityError(f"Coefficient of x^{n} is {acc}/{q0}, not an integer")
        if value < 0:
            raise IntegrityError(f"Coefficient of x^{n} is negative: {value}")
        values.append(value)
    return values


def _even_up(k: int) -> RationalGF:
    return RationalGF(ONE_PLUS_X ** (k // 2), 2 - ONE_PLUS_X ** ((k + 1) // 2))


def _odd_up(k: int) -> RationalGF:
    return RationalGF(
        ONE_PLUS_X ** ((k + 1) // 2), X + 2 - ONE_PLUS_X ** ((k + 2) // 2)
    )


def cyclic_even_up_closed_form(k: int) -> RationalGF:
    """1 + x(floor(k/2) - c (x+1)^e / ((x+1)^m - 2))."""
    tail = RationalGF(
        (k + 1) // 2 * ONE_PLUS_X ** ((k - 1) // 2),
        ONE_PLUS_X ** ((k + 1) // 2) - 2,
    )
    return 1 + X * (k // 2 - tail)


def cyclic_even_up_telescoped_form(k: int) -> RationalGF:
    """1 + x(floor(k/2) + c (x+1)^e / (2 - (x+1)^m)), as derived by telescoping."""
    tail = RationalGF(
        (k + 1) // 2 * ONE_PLUS_X ** ((k - 1) // 2),
        2 - ONE_PLUS_X ** ((k + 1) // 2),
    )
    return 1 + X * (k // 2 + tail)


def _cyclic_odd_up(k: int) -> RationalGF:
    tail = RationalGF(
        (k + 2) // 2 * ONE_PLUS_X ** (k // 2) - 1,
        X + 2 - ONE_PLUS_X ** ((k + 2) // 2),
    )
    return 1 + X * ((k + 1) // 2 + tail)


def _weakly_even_up(k: int) -> RationalGF:
    if k % 2 == 0:
        den = ONE_MINUS_X ** ((k + 2) // 2) + ONE_MINUS_X ** (k // 2) + X - 1
    else:
        den = ONE_MINUS_X ** ((k + 1) // 2) + ONE_MINUS_X ** ((k - 1) // 2) - 1
    return RationalGF(IntPoly.constant(1), den)


def _weakly_odd_up(k: int) -> RationalGF:
    if k % 2 == 0:
        den = 2 * ONE_MINUS_X ** (k // 2) - 1
    else:
        den = 2 * ONE_MINUS_X ** ((k + 1) // 2) + X - 1
    return RationalGF(IntPoly.constant(1), den)


def _constant_run(count: int) -> RationalGF:
    """count * x / (1 - x)."""
    return RationalGF(count * X, ONE_MINUS_X)


def _cyclic_weakly_even_up(k: int) -> RationalGF:
    c = (k + 1) // 2
    u = ONE_MINUS_X**c
    body = RationalGF(2 * u + c * X - 1, (2 - X) * u + X - 1)
    return _constant_run(k // 2) + body


def _cyclic_weakly_odd_up(k: int) -> RationalGF:
    # Equals 1 - x Q'(x)/Q(x) with Q the weakly odd-up denominator.
    r = k // 2 + 1
    u = ONE_MINUS_X**r
    body = RationalGF(2 * u + r * X - 1, 2 * u + X - 1)
    return _constant_run((k + 1) // 2) + body


_BUILDERS: Dict[Tuple[Strictness, Parity, Topology], Callable[[int], RationalGF]] = {
    (Strictness.STRICT, Parity.EVEN_UP, Topology.LINEAR): _even_up,
    (Strictness.STRICT, Parity.ODD_UP, Topology.LINEAR): _odd_up,
    (Strictness.STRICT, Parity.EVEN_UP, Topology.CYCLIC): cyclic_even_up_closed_form,
    (Strictness.STRICT, Parity.ODD_UP, Topology.CYCLIC): _cyclic_odd_up,
    (Strictness.WEAK, Parity.EVEN_UP, Topology.LINEAR): _weakly_even_up,
    (Strictness.WEAK, Parity.ODD_UP, Topology.LINEAR): _weakly_odd_up,
    (Strictness.WEAK, Parity.EVEN_UP, Topology.CYCLIC): _cyclic_weakly_even_up,
    (Strictness.WEAK, Parity.ODD_UP, Topology.CYCLIC): _cyclic_weakly_odd_up,
}


def build_gf(word_class: WordClass, k: int) -> RationalGF:
    """
    Closed-form generating function of a class over [k].

    Args:
        word_class: One of the eight classes
        k: Alphabet size (>= 1)

    Returns:
        RationalGF whose n-th coefficient counts the words of length n
    """
    if k < 1:
        raise ValueError(f"Alphabet size must be at least 1, got {k}")
    builder = _BUILDERS[
        (word_class.strictness, word_class.parity, word_class.topology)
    ]
    return builder(k)


def gf_table(word_class: WordClass, k: int, n_max: int) -> CountTable:
    return CountTable(word_class, k, expand_gf(build_gf(word_class, k), n_max))


def ending_letter_gf(k: int, i: int) -> RationalGF:
    """
    Generating function of strict even-up words over [k] ending with letter i.

    x (x+1)^floor((i-1)/2) / (2 - (x+1)^floor((k+1)/2)); the constant term is 0.
    """
    if not 1 <= i <= k:
        raise ValueError(f"Letter {i} is outside [1, {k}]")
    return RationalGF(
        X * ONE_PLUS_X ** ((i - 1) // 2), 2 - ONE_PLUS_X ** ((k + 1) // 2)
    )


@dataclass(frozen=True)
class Telescoper:
    """G(i) = (i+1)(x+1)^i / (2 - (x+1)^(i+1)), with G(-1) = 0."""

    index: int
    value: RationalGF


def telescoper(i: int) -> Telescoper:
    if i < -1:
        raise ValueError(f"Telescoper index must be >= -1, got {i}")
    if i == -1:
        return Telescoper(i, RationalGF.of(0))
    return Telescoper(
        i, RationalGF((i + 1) * ONE_PLUS_X**i, 2 - ONE_PLUS_X ** (i + 1))
    )


def telescoping_summand(i: int, cube_exponent_shift: int = 0) -> RationalGF:
    """
    The i-th summand of the cyclic even-up sum, without its leading factor x.

    [(x+1)^3i - 4(x+1)^2i - 2ix(x+1)^(2i-1) + 4(x+1)^i + 4ix(x+1)^(i-1)]
    / [(2 - (x+1)^i)^2 (2 - (x+1)^(i+1))]

    ``cube_exponent_shift`` perturbs the (x+1)^3i term; it is zero for the
    real summand.
    """
    if i < 0:
        raise ValueError(f"Summand index must be >= 0, got {i}")
    y = ONE_PLUS_X
    num = y ** (3 * i + cube_exponent_shift) - 4 * y ** (2 * i) + 4 * y**i
    if i > 0:
        num = num - 2 * i * X * y ** (2 * i - 1) + 4 * i * X * y ** (i - 1)
    den = (2 - y**i) ** 2 * (2 - y ** (i + 1))
    return RationalGF(num, den)


def telescoping_check(
    i_max: int,
    order: int,
    summand: Callable[[int], RationalGF] = telescoping_summand,
) -> bool:
    """
    Check G(i) - G(i-1) against the summand for every 0 <= i <= i_max.

    Both sides are compared as power series truncated at ``order``.
    """
    if i_max < 0 or order < 1:
        raise ValueError(f"Invalid arguments i_max={i_max}, order={order}")
    for i in range(i_max + 1):
        difference = telescoper(i).value - telescoper(i - 1).value
        if difference.to_series(order) != summand(i).to_series(order):
            logger.info(f"Telescoping identity fails at i={i}")
            return False
    return True


def _with_empty(counts: List[int], m: int) -> int:
    return 1 if m == -1 else counts[m]


def cyclic_even_up_by_insertion(k: int, n_max: int) -> List[int]:
    """
    Cyclic even-up counts built letter by letter.

    Adding an even letter k+1 only adds the single word of length one.
    Adding an odd letter k+1 splits a cyclic word at its occurrences of k+1:
    f_{k+1,n} = f_{k,n} + sum_{i=1..n} i a_{k+1,n-i-1} a_{k,i-1}, where a
    counts linear even-up words and a_{.,-1} = 1.
    """
    if k < 1 or n_max < 0:
        raise ValueError(f"Invalid arguments k={k}, n_max={n_max}")
    f = [1] + [0] * n_max
    previous = [1] + [0] * n_max
    for letter in range(1, k + 1):
        current = expand_gf(_even_up(letter), n_max)
        if letter % 2 == 0:
            if n_max >= 1:
                f[1] += 1
        else:
            f = [f[0]] + [
                f[n]
                + sum(
                    i * _with_empty(current, n - i - 1) * _with_empty(previous, i - 1)
                    for i in range(1, n + 1)
                )
                for n in range(1, n_max + 1)
            ]
        previous = current
    return f
