"""
Words over the alphabet [k] = {1, ..., k} and the even-up / odd-up classes.

A word belongs to one of eight classes built from three independent choices:
strict or weak comparison, even-up or odd-up parity, linear or cyclic
topology. In an even-up word every even letter that has a successor is
followed by a larger letter (strictly larger for the strict classes, larger
or equal for the weak ones); odd-up words constrain odd letters instead.
Cyclic words also constrain the wrap from the last letter back to the first,
but only for words of length at least two.

This module holds the shared data types, the membership predicate and the
brute-force enumerator that serves as ground truth for every other engine.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Tuple

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 100_000_000


class BudgetExceededError(RuntimeError):
    """Exception raised when an enumeration would exceed the word budget."""

    def __init__(
        self,
        k: int,
        n: int,
        budget: int,
        size: Optional[int] = None,
        subject: Optional[str] = None,
    ):
        self.k = k
        self.n = n
        self.budget = budget
        self.size = k**n if size is None else size
        subject = subject or f"candidate words (k={k}, n={n})"
        super().__init__(f"Enumeration of {self.size} {subject} exceeds budget {budget}")


class Strictness(Enum):
    """Comparison required after a constrained letter."""

    STRICT = "strict"
    WEAK = "weak"


class Parity(Enum):
    """Which letters carry the up constraint."""

    EVEN_UP = "even-up"
    ODD_UP = "odd-up"

    @property
    def remainder(self) -> int:
        return 0 if self is Parity.EVEN_UP else 1


class Topology(Enum):
    """Whether the constraint also wraps from the last letter to the first."""

    LINEAR = "linear"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class WordClass:
    """One of the eight restricted word classes."""

    strictness: Strictness
    parity: Parity
    topology: Topology = Topology.LINEAR

    @property
    def name(self) -> str:
        """Command-line name, e.g. ``cyclic-weakly-odd-up``."""
        parts = []
        if self.topology is Topology.CYCLIC:
            parts.append("cyclic")
        if self.strictness is Strictness.WEAK:
            parts.append("weakly")
        parts.append(self.parity.value)
        return "-".join(parts)

    @property
    def is_cyclic(self) -> bool:
        return self.topology is Topology.CYCLIC

    @property
    def linear(self) -> "WordClass":
        """The class with the same letter rule and linear topology."""
        return WordClass(self.strictness, self.parity, Topology.LINEAR)

    def is_constrained(self, letter: int) -> bool:
        return letter % 2 == self.parity.remainder

    def may_follow(self, current: int, following: int) -> bool:
        """True if ``following`` may come right after ``current``."""
        if not self.is_constrained(current):
            return True
        if self.strictness is Strictness.STRICT:
            return following > current
        return following >= current

    @classmethod
    def from_name(cls, name: str) -> "WordClass":
        for word_class in all_word_classes():
            if word_class.name == name:
                return word_class
        raise ValueError(
            f"Unknown word class '{name}'; expected one of "
            f"{', '.join(c.name for c in all_word_classes())}"
        )

    def __str__(self) -> str:
        return self.name


def all_word_classes() -> List[WordClass]:
    """The eight classes in the order their tables are usually listed."""
    classes = []
    for strictness in (Strictness.STRICT, Strictness.WEAK):
        for topology in (Topology.LINEAR, Topology.CYCLIC):
            for parity in (Parity.EVEN_UP, Parity.ODD_UP):
                classes.append(WordClass(strictness, parity, topology))
    return classes


@dataclass(frozen=True)
class Word:
    """A finite word over [k]."""

    letters: Tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"Alphabet size must be at least 1, got {self.k}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not 1 <= letter <= self.k:
                raise ValueError(f"Letter {letter} is outside [1, {self.k}]")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        separator = "" if self.k < 10 else " "
        return separator.join(str(v) for v in self.letters)


@dataclass
class CountTable:
    """Exact counts for one class and alphabet size, indexed by length."""

    word_class: WordClass
    k: int
    counts: List[int] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def check_invariants(self) -> List[str]:
        """
        Check the table against the invariants every class satisfies.

        Returns:
            List of violation messages (empty if the table is sound)
        """
        problems = []
        if self.counts and self.counts[0] != 1:
            problems.append(f"count at n=0 is {self.counts[0]}, expected 1")
        if len(self.counts) > 1 and self.counts[1] != self.k:
            problems.append(f"count at n=1 is {self.counts[1]}, expected {self.k}")
        for n, value in enumerate(self.counts):
            if value < 0:
                problems.append(f"count at n={n} is negative")
            elif value > self.k**n:
                problems.append(f"count at n={n} exceeds k^n = {self.k ** n}")
        return problems


def satisfies(word: Word, word_class: WordClass) -> bool:
    """
    Decide membership of a word in a class.

    The cyclic wrap condition only applies to words of length two or more;
    every word of length 0 or 1 belongs to every class.
    """
    letters = word.letters
    for current, following in zip(letters, letters[1:]):
        if not word_class.may_follow(current, following):
            return False
    if word_class.is_cyclic and len(letters) >= 2:
        return word_class.may_follow(letters[-1], letters[0])
    return True


def check_budget(k: int, n: int, budget: int) -> None:
    """Raise BudgetExceededError if k**n candidate words exceed the budget."""
    if n > 0 and k**n > budget:
        raise BudgetExceededError(k, n, budget)


def _successors(word_class: WordClass, k: int) -> Tuple[Tuple[int, ...], ...]:
    table: List[Tuple[int, ...]] = [()]
    for current in range(1, k + 1):
        table.append(
            tuple(b for b in range(1, k + 1) if word_class.may_follow(current, b))
        )
    return tuple(table)


def enumerate_words(
    word_class: WordClass, k: int, n: int, budget: int = DEFAULT_BUDGET
) -> Iterator[Word]:
    """
    Yield every word of the class of length n over [k] in lexicographic order.

    Prefixes that already break the rule are pruned, so the work done is
    proportional to the number of valid prefixes.

    Raises:
        BudgetExceededError: If k**n exceeds the budget
        ValueError: If k < 1 or n < 0
    """
    if k < 1 or n < 0:
        raise ValueError(f"Invalid arguments k={k}, n={n}")
    check_budget(k, n, budget)
    if n == 0:
        yield Word((), k)
        return

    successors = _successors(word_class, k)
    prefix: List[int] = []

    def extend(remaining: int) -> Iterator[Word]:
        if remaining == 0:
            if (
                not word_class.is_cyclic
                or len(prefix) < 2
                or word_class.may_follow(prefix[-1], prefix[0])
            ):
                yield Word(tuple(prefix), k)
            return
        for letter in successors[prefix[-1]]:
            prefix.append(letter)
            yield from extend(remaining - 1)
            prefix.pop()

    for first in range(1, k + 1):
        prefix.append(first)
        yield from extend(n - 1)
        prefix.pop()


def _count_from_first(word_class: WordClass, k: int, n: int, first: int) -> int:
    successors = _successors(word_class, k)
    cyclic = word_class.is_cyclic and n >= 2
    # closing[last] = number of letters b after ``last`` that may also precede ``first``
    closing = [0] + [
        sum(1 for b in successors[last] if not cyclic or word_class.may_follow(b, first))
        for last in range(1, k + 1)
    ]

    def extend(last: int, remaining: int) -> int:
        if remaining == 1:
            return closing[last]
        return sum(extend(b, remaining - 1) for b in successors[last])

    if n == 1:
        return 1
    return extend(first, n - 1)


def count_brute_force(
    word_class: WordClass,
    k: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> int:
    """
    Count the words of a class by depth-first enumeration.

    The search is split by first letter; with ``workers > 1`` the partitions
    run in a thread pool and their counts are summed, which gives the same
    total as the sequential run.

    Args:
        word_class: Class to count
        k: Alphabet size (>= 1)
        n: Word length (>= 0)
        budget: Upper bound on k**n
        workers: Number of threads for the first-letter partitions

    Returns:
        Exact number of words of length n over [k] in the class

    Raises:
        BudgetExceededError: If k**n exceeds the budget
        ValueError: If k < 1 or n < 0
    """
    if k < 1 or n < 0:
        raise ValueError(f"Invalid arguments k={k}, n={n}")
    check_budget(k, n, budget)
    if n == 0:
        return 1

    firsts = range(1, k + 1)
    if workers > 1 and k > 1:
        with ThreadPoolExecutor(max_workers=min(workers, k)) as pool:
            parts = list(
                pool.map(lambda f: _count_from_first(word_class, k, n, f), firsts)
            )
    else:
        parts = [_count_from_first(word_class, k, n, f) for f in firsts]

    logger.debug(f"{word_class.name} k={k} n={n}: partitions {parts}")
    return sum(parts)


def brute_force_table(
    word_class: WordClass, k: int, n_max: int, budget: int = DEFAULT_BUDGET
) -> CountTable:
    """Brute-force counts for n = 0..n_max collected into a CountTable."""
    return CountTable(
        word_class,
        k,
        [count_brute_force(word_class, k, n, budget) for n in range(n_max + 1)],
    )
