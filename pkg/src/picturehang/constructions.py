"""Closed-form hanging words: nested commutators, balanced trees, class words.

All three builders return as-constructed words: every letter laid out by the
recursion is kept, no reduction is applied.  The classic length formulas are
stated against exactly these sequences (none of them admits a cancellation).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .words import Word, raw_commutator, raw_concat


def build_s(n: int) -> Word:
    """Nested-commutator 1-of-n word: S_1 = x1, S_n = [S_{n-1}, x_n]."""
    if n < 1:
        raise ValueError(f"build_s needs n >= 1, got {n}")
    w = Word((1,), reduced=True)
    for i in range(2, n + 1):
        w = raw_commutator(w, Word((i,), reduced=True))
    return w


def s_word_length(n: int) -> int:
    """Letter count of S_n: 2^n + 2^(n-1) - 2."""
    return (1 << n) + (1 << (n - 1)) - 2


def build_e(indices: Sequence[int]) -> Word:
    """Balanced 1-of-n word over the given nails.

    A singleton is its generator; otherwise the commutator of E over the
    first ceil(m/2) indices and E over the rest.  Each generator appears at
    most 2n times and the whole word has at most 2n^2 letters.
    """
    idx = list(indices)
    if not idx:
        raise ValueError("build_e needs at least one nail index")
    if len(set(idx)) != len(idx):
        raise ValueError("build_e indices must be distinct")
    for i in idx:
        if i < 1:
            raise ValueError(f"nail index {i} out of range: nails are 1-based")
    return _e_over(idx)


def _e_over(idx: list[int]) -> Word:
    if len(idx) == 1:
        return Word((idx[0],), reduced=True)
    half = (len(idx) + 1) // 2
    return raw_commutator(_e_over(idx[:half]), _e_over(idx[half:]))


def e_word_length(n: int) -> int:
    """Letter count of the balanced word on n nails.

    With n = 2^a + b and 0 <= b < 2^a this is (2^a)^2 + b(2^(a+2) - 2^a).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = n.bit_length() - 1
    b = n - (1 << a)
    return (1 << a) ** 2 + b * ((1 << (a + 2)) - (1 << a))


def build_disjoint(partition: Sequence[Iterable[int]]) -> Word:
    """Hanging word that falls iff some class of the partition is fully removed.

    Classes must partition 1..n.  Each class contributes the ascending
    concatenation of its generators; those class words then take the places
    of single generators in the balanced recursion.  With k classes the
    result has at most 2kn letters.
    """
    classes = [sorted(set(c)) for c in partition]
    if not classes or any(not c for c in classes):
        raise ValueError("partition classes must be nonempty")
    flat = sorted(i for c in classes for i in c)
    n = len(flat)
    if flat != list(range(1, n + 1)):
        raise ValueError("classes must partition 1..n with no overlap or gap")
    class_words = [Word(tuple(c), reduced=True) for c in classes]
    return _e_tree(class_words)


def _e_tree(words: list[Word]) -> Word:
    if len(words) == 1:
        return raw_concat(words[0])
    half = (len(words) + 1) // 2
    return raw_commutator(_e_tree(words[:half]), _e_tree(words[half:]))
