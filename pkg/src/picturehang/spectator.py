"""Optimization problems for the spectator who removes nails.

Three questions about a hanging word: the fewest nail removals that drop
the picture, the most removals it survives, and a Set-Cover-shaped
instance generator whose optimum transfers to the felling problem.  The
exact searches enumerate subsets by increasing (or decreasing)
cardinality with early exit; answers in practice are small.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .compiler import gadget_and
from .constructions import build_e
from .words import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    ExhaustiveLimitError,
    NailSubset,
    Word,
    remove_nails,
)

__all__ = [
    "min_fell_exact",
    "max_survive_exact",
    "greedy_min_fell",
    "set_cover_to_hanging",
]


def _falls_mask(letters: Sequence[int], mask: int) -> bool:
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
    return not stack


def _masks_of_size(n: int, k: int) -> Iterator[int]:
    """All n-bit masks with k bits set, in increasing numeric order."""
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        yield mask
        # Gosper's hack: next mask with the same popcount.
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def _check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ExhaustiveLimitError(
            f"{what} over n={n} enumerates 2^{n} subsets, beyond the "
            f"exhaustive limit {limit}; pass limit={n} to allow it"
        )


def min_fell_exact(w: Word, n: int, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> NailSubset:
    """Smallest subset of nails whose removal fells the picture.

    Ties within a cardinality class break toward the numerically smallest
    bitmask.  Always well defined: removing every nail empties the word.
    """
    if w.max_nail > n:
        raise ValueError(f"word uses nail {w.max_nail} beyond n={n}")
    _check_limit(n, limit, "min_fell_exact")
    letters = w.reduce().letters
    for k in range(n + 1):
        for mask in _masks_of_size(n, k):
            if _falls_mask(letters, mask):
                return NailSubset(n, mask)
    raise AssertionError("unreachable: the full subset always fells")


def max_survive_exact(w: Word, n: int, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> NailSubset:
    """Largest subset of nails whose removal leaves the picture hanging.

    Same tie-break as min_fell_exact.  A trivial word has no answer: it
    has already fallen with no nails removed.
    """
    if w.max_nail > n:
        raise ValueError(f"word uses nail {w.max_nail} beyond n={n}")
    _check_limit(n, limit, "max_survive_exact")
    letters = w.reduce().letters
    if not letters:
        raise ValueError("word is trivial: the picture has already fallen")
    for k in range(n - 1, -1, -1):
        for mask in _masks_of_size(n, k):
            if not _falls_mask(letters, mask):
                return NailSubset(n, mask)
    raise AssertionError("unreachable: the empty subset hangs a nontrivial word")


def greedy_min_fell(w: Word, n: int) -> NailSubset:
    """Felling subset built by repeatedly removing the most shortening nail.

    Each step removes the nail that minimizes the reduced residual length,
    breaking ties toward the lowest index.  No approximation guarantee is
    claimed; the exact optimum is never larger.
    """
    if w.max_nail > n:
        raise ValueError(f"word uses nail {w.max_nail} beyond n={n}")
    chosen: set[int] = set()
    residual = w.reduce()
    while residual:
        best_nail = 0
        best_len = -1
        for i in range(1, n + 1):
            if i in chosen:
                continue
            length = len(remove_nails(residual, (i,)))
            if best_len < 0 or length < best_len:
                best_nail, best_len = i, length
        chosen.add(best_nail)
        residual = remove_nails(residual, (best_nail,))
    return NailSubset.from_members(n, chosen)


def set_cover_to_hanging(
    m: int, sets: Sequence[Iterable[int]]
) -> tuple[Word, dict[int, tuple[int, ...]]]:
    """Encode a Set Cover instance as a hanging word over one nail per set.

    Element u_j becomes E over the sets containing it; the E-words combine
    under a balanced AND tree.  Removing the nails of a chosen family then
    fells the word exactly when the family covers the universe, so the
    minimum felling subset has the Set Cover optimum's cardinality.
    Returns the word and the per-element owner lists.
    """
    if m < 1:
        raise ValueError("universe must be nonempty")
    n = len(sets)
    owner_sets = [tuple(sorted(set(s))) for s in sets]
    owners: dict[int, tuple[int, ...]] = {}
    for j in range(1, m + 1):
        who = tuple(i for i, s in enumerate(owner_sets, start=1) if j in s)
        if not who:
            raise ValueError(f"element {j} is not covered by any set")
        owners[j] = who
    element_words = [build_e(owners[j]) for j in range(1, m + 1)]
    if len(element_words) == 1:
        return element_words[0], owners
    if n < 2:
        raise ValueError("AND gadgets need at least 2 nails; got n=1 with m >= 2")

    def tree(ws: list[Word]) -> Word:
        if len(ws) == 1:
            return ws[0]
        half = (len(ws) + 1) // 2
        return gadget_and(tree(ws[:half]), tree(ws[half:]))

    return tree(element_words), owners
