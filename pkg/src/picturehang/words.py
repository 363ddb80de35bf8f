"""Words in the free group on n generators, viewed as picture hangings.

A letter is a nonzero integer: +i means one clockwise wrap around nail i,
-i means one counterclockwise wrap.  A word is a finite letter sequence and
the empty word is the fallen picture.  Reduction repeatedly cancels adjacent
inverse pairs; the result is independent of cancellation order, so reduced
words are normal forms and two words are equal iff their reduced letter
tuples coincide.

Removing a set of nails deletes every letter on those nails.  The picture
falls for that removal iff the surviving letters reduce to the empty word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

DEFAULT_EXHAUSTIVE_LIMIT = 20


class ExhaustiveLimitError(ValueError):
    """Raised when a 2^n enumeration is requested beyond the configured limit."""


class WordFormatError(ValueError):
    """Raised when word text or word JSON cannot be parsed."""


class Letter(NamedTuple):
    """A single wrap: nail index (1-based) plus orientation (+1 cw, -1 ccw)."""

    nail: int
    orientation: int

    @property
    def encoded(self) -> int:
        return self.nail * self.orientation

    @classmethod
    def decode(cls, code: int) -> "Letter":
        if code == 0:
            raise ValueError("letter code must be a nonzero integer")
        return cls(abs(code), 1 if code > 0 else -1)


def _check_letters(letters: tuple[int, ...]) -> None:
    for x in letters:
        if not isinstance(x, int) or x == 0:
            raise ValueError(f"invalid letter {x!r}: letters are nonzero integers")


@dataclass(frozen=True, eq=False)
class Word:
    """An immutable letter sequence with a known-reduced flag.

    ``letters`` is the as-constructed sequence; ``len(w)`` counts it without
    reducing.  Equality and hashing go through the reduced normal form, so
    ``Word((1, -1))== Word(())`` holds.
    """

    letters: tuple[int, ...] = ()
    reduced: bool = field(default=False, compare=False)

    @classmethod
    def of(cls, *codes: int) -> "Word":
        letters = tuple(codes)
        _check_letters(letters)
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.reduce().letters)

    @property
    def max_nail(self) -> int:
        """Largest nail index used, 0 for the empty word."""
        return max((x if x > 0 else -x for x in self.letters), default=0)

    def reduce(self) -> "Word":
        if self.reduced:
            return self
        return Word(tuple(_reduce_seq(self.letters)), reduced=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.reduce().letters == other.reduce().letters

    def __hash__(self) -> int:
        return hash(self.reduce().letters)

    def __repr__(self) -> str:
        text = format_word(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"Word({text!r}, letters={len(self.letters)})"


EMPTY_WORD = Word((), reduced=True)


def _reduce_seq(letters: Iterable[int]) -> list[int]:
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for x in letters:
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return stack


def reduce(w: Word) -> Word:
    """Normal form of w: all adjacent inverse pairs cancelled."""
    return w.reduce()


def raw_concat(*words: Word) -> Word:
    """Concatenation without reduction, preserving as-constructed letters."""
    out: list[int] = []
    for w in words:
        out.extend(w.letters)
    return Word(tuple(out))


def raw_inverse(w: Word) -> Word:
    """Formal inverse without reduction: reverse the letters and flip signs."""
    return Word(tuple(-x for x in reversed(w.letters)))


def raw_commutator(a: Word, b: Word) -> Word:
    """a b a^-1 b^-1 with no reduction."""
    return raw_concat(a, b, raw_inverse(a), raw_inverse(b))


def raw_power(w: Word, k: int) -> Word:
    if k < 0:
        return raw_power(raw_inverse(w), -k)
    return Word(w.letters * k)


def concat(*words: Word) -> Word:
    """Reduced concatenation (the group product)."""
    return raw_concat(*words).reduce()


def inverse(w: Word) -> Word:
    return raw_inverse(w).reduce()


def power(w: Word, k: int) -> Word:
    return raw_power(w, k).reduce()


def commutator(a: Word, b: Word) -> Word:
    return raw_commutator(a, b).reduce()


def _as_mask(nails: "NailSubset | Iterable[int]") -> int:
    if isinstance(nails, NailSubset):
        return nails.mask
    mask = 0
    for i in nails:
        if i < 1:
            raise ValueError(f"nail index {i} out of range: nails are 1-based")
        mask |= 1 << (i - 1)
    return mask


def remove_nails(w: Word, nails: "NailSubset | Iterable[int]") -> Word:
    """Reduced residual word after deleting every letter on the given nails."""
    mask = _as_mask(nails)
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for x in w.letters:
        nail = x if x > 0 else -x
        if (mask >> (nail - 1)) & 1:
            continue
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return Word(tuple(stack), reduced=True)


def falls(w: Word, nails: "NailSubset | Iterable[int]") -> bool:
    """True iff the picture falls when the given nails are removed."""
    mask = _as_mask(nails)
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for x in w.letters:
        nail = x if x > 0 else -x
        if (mask >> (nail - 1)) & 1:
            continue
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return not stack


def fall_table(w: Word, n: int, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> list[bool]:
    """Fall value for every subset of nails 1..n, indexed by bitmask.

    Bit i-1 of the index is set iff nail i is removed.  Refuses n beyond
    ``limit`` since the enumeration is exhaustive over 2^n subsets.
    """
    if w.max_nail > n:
        raise ValueError(f"word uses nail {w.max_nail} beyond n={n}")
    if n > limit:
        raise ExhaustiveLimitError(
            f"fall_table over n={n} enumerates 2^{n} subsets, beyond the "
            f"exhaustive limit {limit}; pass limit={n} to allow it"
        )
    letters = w.reduce().letters
    table = []
    append = table.append
    for mask in range(1 << n):
        stack: list[int] = []
        push = stack.append
        pop = stack.pop
        for x in letters:
            nail = x if x > 0 else -x
            if (mask >> (nail - 1)) & 1:
                continue
            if stack and stack[-1] == -x:
                pop()
            else:
                push(x)
        append(not stack)
    return table


def is_monotone_table(table: list[bool], n: int) -> bool:
    """True iff the table never flips from fall back to hang as nails are added."""
    for mask in range(1 << n):
        if not table[mask]:
            continue
        for i in range(n):
            if not (mask >> i) & 1 and not table[mask | (1 << i)]:
                return False
    return True


@dataclass(frozen=True)
class NailSubset:
    """A subset of nails 1..n stored as a bitmask (bit i-1 = nail i removed)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "NailSubset":
        mask = 0
        for i in members:
            if not 1 <= i <= n:
                raise ValueError(f"nail {i} out of range 1..{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "NailSubset":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "NailSubset":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.n) if (self.mask >> i) & 1)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, nail: int) -> bool:
        return 1 <= nail <= self.n and bool((self.mask >> (nail - 1)) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


def nail_counts(w: Word, n: int | None = None) -> dict[int, int]:
    """Letters per nail in the as-constructed sequence (zero rows included)."""
    counts = {i: 0 for i in range(1, (n or w.max_nail) + 1)}
    for x in w.letters:
        nail = x if x > 0 else -x
        counts[nail] = counts.get(nail, 0) + 1
    return counts


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens: x<k> clockwise, X<k> counterclockwise."""
    letters: list[int] = []
    for pos, token in enumerate(text.split()):
        head, tail = token[:1], token[1:]
        if head not in ("x", "X") or not tail.isdigit():
            raise WordFormatError(f"bad token {token!r} at position {pos}")
        nail = int(tail)
        if nail < 1:
            raise WordFormatError(f"bad token {token!r} at position {pos}: nails are 1-based")
        letters.append(nail if head == "x" else -nail)
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    return " ".join(f"x{x}" if x > 0 else f"X{-x}" for x in w.letters)


def word_to_json(w: Word) -> str:
    return json.dumps(list(w.letters))


def word_from_json(text: str) -> Word:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WordFormatError(f"bad word JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) and x != 0 for x in data):
        raise WordFormatError("word JSON must be an array of nonzero integers")
    return Word(tuple(data))
