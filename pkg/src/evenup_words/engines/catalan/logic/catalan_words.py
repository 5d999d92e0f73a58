"""
Restricted Catalan words.

A Catalan word starts with 1 and never climbs by more than one:
w_1 = 1 and w_{i+1} <= w_i + 1. The restricted variants add the linear
even-up or odd-up rule (strict or weak) and optionally require the last
letter to be odd or even. Counts are produced four ways: enumeration,
a dynamic programme over the last letter, the algebraic generating
functions and the convolution systems relating the four sequences of a
family.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ....shared_libs.exact_algebra import (
    IntegrityError,
    IntPoly,
    Series,
    SeriesError,
    series_sqrt,
)
from ....shared_libs.words import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    Parity,
    Strictness,
    Word,
    WordClass,
    satisfies,
)

logger = logging.getLogger(__name__)


class Ending(Enum):
    """Filter on the parity of the last letter."""

    ANY = "any"
    ODD_END = "odd-end"
    EVEN_END = "even-end"

    def accepts(self, letter: int) -> bool:
        if self is Ending.ODD_END:
            return letter % 2 == 1
        if self is Ending.EVEN_END:
            return letter % 2 == 0
        return True


@dataclass(frozen=True)
class CatalanVariant:
    """
    A restricted Catalan word class.

    ``parity`` is None for the unrestricted words, which only serve as a
    sanity check against the Catalan numbers.
    """

    strictness: Strictness
    parity: Optional[Parity]
    ending: Ending = Ending.ANY

    @property
    def name(self) -> str:
        if self.parity is None:
            base = "unrestricted"
        else:
            prefix = "weakly" if self.strictness is Strictness.WEAK else "strict"
            base = f"{prefix}-{self.parity.value}"
        if self.ending is Ending.ANY:
            return base
        return f"{base}-{self.ending.value}"

    @property
    def word_class(self) -> Optional[WordClass]:
        if self.parity is None:
            return None
        return WordClass(self.strictness, self.parity)

    def allows(self, current: int, following: int) -> bool:
        if not 1 <= following <= current + 1:
            return False
        word_class = self.word_class
        return word_class is None or word_class.may_follow(current, following)

    @classmethod
    def from_name(cls, name: str) -> "CatalanVariant":
        for variant in table_variants() + unrestricted_variants():
            if variant.name == name:
                return variant
        raise ValueError(
            f"Unknown Catalan variant '{name}'; expected one of "
            f"{', '.join(v.name for v in table_variants())}"
        )

    def __str__(self) -> str:
        return self.name


def family_variants(strictness: Strictness) -> Tuple[CatalanVariant, ...]:
    """The (A, B, A', B') variants of one family."""
    return (
        CatalanVariant(strictness, Parity.EVEN_UP),
        CatalanVariant(strictness, Parity.ODD_UP),
        CatalanVariant(strictness, Parity.EVEN_UP, Ending.ODD_END),
        CatalanVariant(strictness, Parity.ODD_UP, Ending.EVEN_END),
    )


def table_variants() -> List[CatalanVariant]:
    """The eight variants with closed forms, weak family first."""
    return list(family_variants(Strictness.WEAK) + family_variants(Strictness.STRICT))


def unrestricted_variants() -> List[CatalanVariant]:
    return [
        CatalanVariant(Strictness.WEAK, None, ending)
        for ending in (Ending.ANY, Ending.ODD_END, Ending.EVEN_END)
    ]


def catalan_number(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def enumerate_catalan(n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Word]:
    """
    Yield every Catalan word of length n in lexicographic order.

    Words are over the alphabet [n] (the empty word uses [1]).

    Raises:
        BudgetExceededError: If the Catalan number C_n exceeds the budget
    """
    if n < 0:
        raise ValueError(f"Negative length {n}")
    size = catalan_number(n)
    if size > budget:
        raise BudgetExceededError(
            n, n, budget, size=size, subject=f"Catalan words of length {n}"
        )
    k = max(n, 1)
    if n == 0:
        yield Word((), k)
        return
    prefix = [1]

    def extend() -> Iterator[Word]:
        if len(prefix) == n:
            yield Word(tuple(prefix), k)
            return
        for letter in range(1, prefix[-1] + 2):
            prefix.append(letter)
            yield from extend()
            prefix.pop()

    yield from extend()


def _matches(word: Word, variant: CatalanVariant) -> bool:
    word_class = variant.word_class
    if word_class is not None and not satisfies(word, word_class):
        return False
    return len(word) == 0 or variant.ending.accepts(word.letters[-1])


def dp_counts(variant: CatalanVariant, n_max: int) -> List[int]:
    """
    Counts for n = 0..n_max with state = value of the last letter.

    The empty word counts once for every variant.
    """
    if n_max < 0:
        return []
    counts = [1]
    if n_max == 0:
        return counts
    # by_last[v] = number of admissible words of the current length ending with v
    by_last = [0, 1]
    for n in range(1, n_max + 1):
        if n > 1:
            following = [0] * (n + 1)
            for v, c in enumerate(by_last):
                if not c:
                    continue
                for w in range(1, v + 2):
                    if variant.allows(v, w):
                        following[w] += c
            by_last = following
        counts.append(
            sum(c for v, c in enumerate(by_last) if c and variant.ending.accepts(v))
        )
    return counts


def count_catalan_filtered(
    variant: CatalanVariant, n: int, method: str = "dp", budget: int = DEFAULT_BUDGET
) -> int:
    """
    Number of Catalan words of length n in a variant.

    Args:
        variant: Variant to count
        n: Word length (>= 0)
        method: "dp" or "enum"
        budget: Word budget for enumeration

    Raises:
        BudgetExceededError: If enumeration would exceed the budget
    """
    if n < 0:
        raise ValueError(f"Negative length {n}")
    if method == "dp":
        return dp_counts(variant, n)[n]
    if method == "enum":
        return sum(1 for word in enumerate_catalan(n, budget) if _matches(word, variant))
    raise ValueError(f"Unknown Catalan counting method '{method}'")


def family_series(strictness: Strictness, order: int) -> Dict[CatalanVariant, Series]:
    """
    Closed-form series A, B, A', B' of a family, truncated at ``order``.

    Every closed form divides by x; the radicand is expanded one order
    higher so that the shifted series still reach ``order``.
    """
    a, b, a_odd, b_even = family_variants(strictness)
    n = order + 1
    x = Series.x(n)
    one = Series.constant(1, n)
    if strictness is Strictness.WEAK:
        s = series_sqrt(IntPoly((1, -4, 2, 0, 1)).to_series(n))
        over_x = {
            a: one - x - s,
            b: -(IntPoly((-2, 1, 2, 1)).to_series(n) + IntPoly((2, 1)) * s)
            * Fraction(1, 2),
            a_odd: (IntPoly((1, 0, 1)).to_series(n) - s) * Fraction(1, 2),
            b_even: (IntPoly((1, 0, -1)).to_series(n) - s) * Fraction(1, 2),
        }
        divisors: Dict[CatalanVariant, Series] = {}
    else:
        r = series_sqrt(IntPoly((1, -2, -3)).to_series(n))
        one_plus_x = IntPoly((1, 1)).to_series(n)
        over_x = {
            a: (IntPoly((2, 1, -1)).to_series(n) - IntPoly((2, 1)) * r)
            * Fraction(1, 2),
            b: one - r,
            a_odd: (one_plus_x - r) * Fraction(1, 2),
            b_even: (one_plus_x - r) * Fraction(1, 2),
        }
        divisors = {a: one_plus_x, b: one_plus_x, b_even: one_plus_x}

    result = {}
    for variant, numerator in over_x.items():
        try:
            shifted = numerator.shift_down()
        except SeriesError as e:
            raise IntegrityError(f"{variant.name}: numerator does not vanish at 0") from e
        divisor = divisors.get(variant)
        if divisor is not None:
            shifted = shifted / divisor.truncate(order)
        result[variant] = shifted
    return result


def expand_catalan_gf(variant: CatalanVariant, n_max: int) -> List[int]:
    """
    Coefficients 0..n_max of the closed-form generating function of a variant.

    Raises:
        ValueError: For the unrestricted variants, which have no closed form here
        IntegrityError: If a coefficient is fractional or negative
    """
    if variant.parity is None:
        raise ValueError(f"No closed form for Catalan variant '{variant.name}'")
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    series = family_series(variant.strictness, n_max)[variant]
    try:
        values = series.to_ints()
    except SeriesError as e:
        raise IntegrityError(f"{variant.name}: {e}") from e
    if any(v < 0 for v in values):
        raise IntegrityError(f"{variant.name}: negative coefficient in {values}")
    return values


def convolution_counts(
    strictness: Strictness, n_max: int
) -> Tuple[List[int], List[int], List[int], List[int]]:
    """
    The four sequences (a, b, a', b') of a family from their joint recurrences.

    For n >= 2:
        a_n  = b_{n-1}  + sum_{i=2..n}  b'_{i-2} a_{n-i+1}
        b_n  = a_{n-1}  + sum_{i=s..n}  a'_{i-2} b_{n-i+1}
        a'_n = b'_{n-1} + sum_{i=2..n}  b'_{i-2} a'_{n-i+1}
        b'_n = a'_{n-1} + sum_{i=s..n}  a'_{i-2} b'_{n-i+1}
    with s = 2 for the weak family and s = 3 for the strict one. Values at
    n = 0 and n = 1 are read off the closed forms.
    """
    if n_max < 0:
        return [], [], [], []
    variants = family_variants(strictness)
    seeds = [expand_catalan_gf(v, 1) for v in variants]
    a, b, a_odd, b_even = ([*seed[: n_max + 1]] for seed in seeds)
    start = 2 if strictness is Strictness.WEAK else 3
    for n in range(2, n_max + 1):
        a.append(b[n - 1] + sum(b_even[i - 2] * a[n - i + 1] for i in range(2, n + 1)))
        b.append(
            a[n - 1] + sum(a_odd[i - 2] * b[n - i + 1] for i in range(start, n + 1))
        )
        a_odd.append(
            b_even[n - 1]
            + sum(b_even[i - 2] * a_odd[n - i + 1] for i in range(2, n + 1))
        )
        b_even.append(
            a_odd[n - 1]
            + sum(a_odd[i - 2] * b_even[n - i + 1] for i in range(start, n + 1))
        )
    return a, b, a_odd, b_even


def convolution_counts_t0(n_max: int) -> Tuple[List[int], List[int], List[int], List[int]]:
    """Weak (even-up / odd-up) family of the convolution system."""
    return convolution_counts(Strictness.WEAK, n_max)


def convolution_sequence(variant: CatalanVariant, n_max: int) -> List[int]:
    """The convolution-system counts of a single variant."""
    if variant.parity is None:
        raise ValueError(f"No convolution system for Catalan variant '{variant.name}'")
    index = family_variants(variant.strictness).index(variant)
    return list(convolution_counts(variant.strictness, n_max)[index])


def functional_equation_residuals(order: int) -> Dict[str, Series]:
    """
    Residuals of the four functional equations of the weak family.

    A  = 1 + x B + x B' (A - 1)
    B  = 1 + x A + x A' (B - 1)
    A' = 1 + x A' B'
    B' = 1 - x + x A' B'

    Each residual is identically zero when the closed forms are right.
    """
    series = family_series(Strictness.WEAK, order)
    a, b, a_odd, b_even = (series[v] for v in family_variants(Strictness.WEAK))
    x = Series.x(order)
    return {
        "A": a - (1 + x * b + x * b_even * (a - 1)),
        "B": b - (1 + x * a + x * a_odd * (b - 1)),
        "A'": a_odd - (1 + x * a_odd * b_even),
        "B'": b_even - (1 - x + x * a_odd * b_even),
    }
