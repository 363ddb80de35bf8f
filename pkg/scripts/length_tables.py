"""Print construction length tables: S_n, E(1:n), and disjoint-class words.

Checks every printed row against the closed-form lengths and bounds, so a
regression shows up as a FAIL marker in the table rather than a silent
drift.  Deterministic; runs in a few seconds.
"""

from __future__ import annotations

import argparse
import random

from picturehang import (
    build_disjoint,
    build_e,
    build_s,
    e_word_length,
    nail_counts,
    s_word_length,
)


def s_table(max_n: int) -> None:
    print("S_n lengths (formula 2^n + 2^(n-1) - 2)")
    print(f"{'n':>3} {'letters':>10} {'formula':>10}")
    for n in range(1, max_n + 1):
        w = build_s(n)
        formula = s_word_length(n)
        flag = "" if len(w) == formula else "  FAIL"
        print(f"{n:>3} {len(w):>10} {formula:>10}{flag}")
    print()


def e_table(max_n: int) -> None:
    print("E(1:n) lengths (formula 4^a + 3b*2^a for n = 2^a + b, bound 2n^2)")
    print(f"{'n':>3} {'letters':>8} {'formula':>8} {'2n^2':>8} {'max/gen':>8} {'2n':>5}")
    for n in range(1, max_n + 1):
        w = build_e(list(range(1, n + 1)))
        formula = e_word_length(n)
        per_gen = max(nail_counts(w, n).values())
        ok = len(w) == formula and len(w) <= 2 * n * n and per_gen <= 2 * n
        flag = "" if ok else "  FAIL"
        print(f"{n:>3} {len(w):>8} {formula:>8} {2 * n * n:>8} {per_gen:>8} {2 * n:>5}{flag}")
    print()


def disjoint_table(trials: int, seed: int) -> None:
    print(f"disjoint-class words, {trials} random partitions (bound 2kn)")
    print(f"{'n':>3} {'k':>3} {'letters':>8} {'2kn':>6}")
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, 12)
        nails = list(range(1, n + 1))
        rng.shuffle(nails)
        k = rng.randint(1, n)
        cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
        classes = []
        prev = 0
        for cut in cuts + [n]:
            classes.append(set(nails[prev:cut]))
            prev = cut
        w = build_disjoint(classes)
        flag = "" if len(w) <= 2 * k * n else "  FAIL"
        print(f"{n:>3} {k:>3} {len(w):>8} {2 * k * n:>6}{flag}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=12)
    ap.add_argument("--max-e", type=int, default=32)
    ap.add_argument("--trials", type=int, default=12)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    s_table(args.max_s)
    e_table(args.max_e)
    disjoint_table(args.trials, args.seed)


if __name__ == "__main__":
    main()
