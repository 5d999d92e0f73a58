"""
Transfer-matrix counting for the restricted word classes.

The k x k matrix M has M[a-1, b-1] = 1 exactly when letter b may follow
letter a. Linear words of length n >= 1 are counted by 1^T M^(n-1) 1 and
cyclic words of length n >= 2 by trace(M^n). Matrices are numpy arrays of
dtype ``object`` holding Python ints, so products never overflow.
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from ....shared_libs.words import Parity, Strictness, WordClass

logger = logging.getLogger(__name__)


class LetterRangeError(ValueError):
    """Exception raised for a letter outside the alphabet [1, k]."""

    pass


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Allowed-adjacency matrix of a word class over [k]."""

    word_class: WordClass
    k: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.entries.shape != (self.k, self.k):
            raise ValueError(
                f"Transition matrix shape {self.entries.shape} does not match k={self.k}"
            )

    def allows(self, a: int, b: int) -> bool:
        return bool(self.entries[a - 1, b - 1])


def build_matrix(word_class: WordClass, k: int) -> TransitionMatrix:
    """
    Build the 0/1 transition matrix of a class.

    Linear and cyclic classes with the same letter rule share one matrix,
    so only the strictness and parity of the class matter here. Use
    rule_matrix to build from those two directly.

    Args:
        word_class: Word class supplying the adjacency rule
        k: Alphabet size (>= 1)

    Returns:
        TransitionMatrix with object-dtype integer entries
    """
    if k < 1:
        raise ValueError(f"Alphabet size must be at least 1, got {k}")
    entries = np.zeros((k, k), dtype=object)
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            entries[a - 1, b - 1] = 1 if word_class.may_follow(a, b) else 0
    return TransitionMatrix(word_class.linear, k, entries)


def rule_matrix(strictness: Strictness, parity: Parity, k: int) -> TransitionMatrix:
    """Build the transition matrix of the linear class with this letter rule."""
    return build_matrix(WordClass(strictness, parity), k)


def linear_counts(m: TransitionMatrix, n_max: int) -> List[int]:
    """Linear counts for n = 0..n_max by iterated matrix-vector products."""
    if n_max < 0:
        return []
    counts = [1]
    vector = np.ones(m.k, dtype=object)
    for n in range(1, n_max + 1):
        if n > 1:
            vector = m.entries.dot(vector)
        counts.append(int(vector.sum()))
    return counts


def count_linear(m: TransitionMatrix, n: int) -> int:
    """Number of linear words of length n, 1^T M^(n-1) 1 (1 for n = 0)."""
    if n < 0:
        raise ValueError(f"Negative length {n}")
    return linear_counts(m, n)[n]


def cyclic_counts(m: TransitionMatrix, n_max: int) -> List[int]:
    """
    Cyclic counts for n = 0..n_max.

    Lengths 0 and 1 are special-cased to 1 and k: every single letter counts,
    while trace(M) would leave out the letters that cannot follow themselves.
    """
    counts: List[int] = []
    power = None
    for n in range(n_max + 1):
        if n == 0:
            counts.append(1)
            continue
        power = m.entries.copy() if power is None else power.dot(m.entries)
        counts.append(m.k if n == 1 else int(sum(power.diagonal())))
    return counts


def count_cyclic(m: TransitionMatrix, n: int) -> int:
    """Number of cyclic words of length n, trace(M^n) for n >= 2."""
    if n < 0:
        raise ValueError(f"Negative length {n}")
    return cyclic_counts(m, n)[n]


def count_by_last_letter(m: TransitionMatrix, n: int, i: int) -> int:
    """
    Number of linear words of length n >= 1 that end with letter i.

    Raises:
        LetterRangeError: If i is outside [1, k]
    """
    if not 1 <= i <= m.k:
        raise LetterRangeError(f"Letter {i} is outside [1, {m.k}]")
    if n < 1:
        raise ValueError(f"Words ending with a letter have length >= 1, got {n}")
    row = np.ones(m.k, dtype=object)
    for _ in range(n - 1):
        row = row.dot(m.entries)
    return int(row[i - 1])


def class_counts(word_class: WordClass, k: int, n_max: int) -> List[int]:
    """Counts for n = 0..n_max using the topology of ``word_class``."""
    m = build_matrix(word_class, k)
    if word_class.is_cyclic:
        return cyclic_counts(m, n_max)
    return linear_counts(m, n_max)
