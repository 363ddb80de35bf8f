"""Batcher odd-even sorting networks and the threshold circuits they yield.

A comparator network sorts ascending: each comparator sends the smaller
value to its low wire.  On 0/1 inputs min is AND and max is OR, so wiring a
network over removal variables turns "at least k of n removed" into a
monotone circuit: after sorting, output wire w-k+1 carries a one iff at
least k inputs were ones.  The zero-one principle says checking all 0/1
inputs certifies the network for arbitrary values.

Widths that are not powers of two are handled two ways, both standard: the
public network generator drops comparators that would touch phantom wires
beyond n (they would carry values larger than everything and never move),
while the threshold builder pads to a power of two with constant-false
inputs and lets constant folding erase the padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .circuits import (
    FALSE,
    TRUE,
    MonotoneCircuit,
    Node,
    Var,
    _var_pack,
    fold_constants,
    make_and,
    make_or,
)
from .words import DEFAULT_EXHAUSTIVE_LIMIT, ExhaustiveLimitError


@dataclass(frozen=True)
class Comparator:
    """One compare-exchange; min lands on wire ``low``, max on ``high`` (1-based)."""

    low: int
    high: int

    def __post_init__(self) -> None:
        if not 1 <= self.low < self.high:
            raise ValueError(f"comparator wires must satisfy 1 <= low < high, got {self}")


@dataclass(frozen=True)
class ComparatorNetwork:
    width: int
    layers: tuple[tuple[Comparator, ...], ...]

    def __post_init__(self) -> None:
        for layer in self.layers:
            used: set[int] = set()
            for comp in layer:
                if comp.high > self.width:
                    raise ValueError(f"{comp} exceeds width {self.width}")
                if comp.low in used or comp.high in used:
                    raise ValueError(f"wire reused within a layer: {comp}")
                used.update((comp.low, comp.high))

    @property
    def depth(self) -> int:
        return len(self.layers)

    def comparators(self) -> Iterator[Comparator]:
        for layer in self.layers:
            yield from layer

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def apply(self, values: Sequence) -> list:
        out = list(values)
        if len(out) != self.width:
            raise ValueError(f"expected {self.width} values, got {len(out)}")
        for comp in self.comparators():
            a, b = out[comp.low - 1], out[comp.high - 1]
            if b < a:
                out[comp.low - 1], out[comp.high - 1] = b, a
        return out


def batcher_network(n: int) -> ComparatorNetwork:
    """Odd-even mergesort network on n wires (Batcher's merge exchange).

    Comparators come out in parallel phases; each phase compares wires d
    apart, so no wire appears twice in a layer.
    """
    if n < 1:
        raise ValueError(f"network width must be >= 1, got {n}")
    layers: list[tuple[Comparator, ...]] = []
    t = max((n - 1).bit_length(), 1)
    p = 1 << (t - 1)
    while p > 0:
        q = 1 << (t - 1)
        r = 0
        d = p
        while d > 0:
            layer = tuple(
                Comparator(i + 1, i + d + 1)
                for i in range(n - d)
                if i & p == r
            )
            if layer:
                layers.append(layer)
            d = q - p
            q >>= 1
            r = p
        p >>= 1
    return ComparatorNetwork(n, tuple(layers))


def sorts_all_zero_one(
    net: ComparatorNetwork, limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> bool:
    """Exhaustive 0/1 soundness check, bit-packed across all inputs at once."""
    if net.width > limit:
        raise ExhaustiveLimitError(
            f"checking width {net.width} enumerates 2^{net.width} inputs, "
            f"beyond the exhaustive limit {limit}"
        )
    packs = [_var_pack(i + 1, net.width) for i in range(net.width)]
    for comp in net.comparators():
        a, b = packs[comp.low - 1], packs[comp.high - 1]
        packs[comp.low - 1], packs[comp.high - 1] = a & b, a | b
    return all(packs[i] & ~packs[i + 1] == 0 for i in range(net.width - 1))


def network_to_circuit(
    net: ComparatorNetwork,
    output_wire: int,
    inputs: Sequence[Node] | None = None,
) -> MonotoneCircuit:
    """Run the network on circuit nodes: min becomes AND, max becomes OR.

    ``inputs`` defaults to Var(1)..Var(width); constants given as inputs are
    folded away as the wiring proceeds.
    """
    if not 1 <= output_wire <= net.width:
        raise ValueError(f"output wire {output_wire} out of range 1..{net.width}")
    wires: list[Node] = list(inputs) if inputs is not None else [
        Var(i) for i in range(1, net.width + 1)
    ]
    if len(wires) != net.width:
        raise ValueError(f"expected {net.width} inputs, got {len(wires)}")
    n = max((node.index for node in wires if isinstance(node, Var)), default=0)
    for comp in net.comparators():
        a, b = wires[comp.low - 1], wires[comp.high - 1]
        wires[comp.low - 1] = make_and(a, b)
        wires[comp.high - 1] = make_or(a, b)
    return fold_constants(MonotoneCircuit(n, wires[output_wire - 1]))


def threshold_over(k: int, inputs: Sequence[Node]) -> Node:
    """Node that is true iff at least k of the given input nodes are true."""
    m = len(inputs)
    if not 0 <= k <= m:
        raise ValueError(f"threshold k={k} out of range 0..{m}")
    if k == 0:
        return TRUE
    width = 1 if m == 1 else 1 << (m - 1).bit_length()
    net = batcher_network(width)
    # Constant-false pads sit on the lowest wires, where an ascending sort
    # would leave them anyway; folding then erases every pad comparator.
    wires: list[Node] = [FALSE] * (width - m) + list(inputs)
    for comp in net.comparators():
        a, b = wires[comp.low - 1], wires[comp.high - 1]
        wires[comp.low - 1] = make_and(a, b)
        wires[comp.high - 1] = make_or(a, b)
    return wires[width - k]


def threshold_circuit(k: int, n: int) -> MonotoneCircuit:
    """Monotone circuit for "at least k of nails 1..n removed"."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"threshold k={k} out of range 0..{n}")
    root = threshold_over(k, [Var(i) for i in range(1, n + 1)])
    return fold_constants(MonotoneCircuit(n, root))


def build_k_of_n(k: int, n: int, budget: int | None = None, verify: bool | None = None):
    """Compile the k-of-n threshold to a hanging word; returns a CompileReport."""
    from .compiler import DEFAULT_LETTER_BUDGET, compile_circuit
    from .circuits import PuzzleSpec

    if not 1 <= k <= n:
        raise ValueError(f"build_k_of_n needs 1 <= k <= n, got k={k}, n={n}")
    if n < 2:
        raise ValueError("gadgets anchor on nails 1 and 2, so n >= 2 is required")
    spec = PuzzleSpec.from_threshold(n, k)
    return compile_circuit(
        spec,
        budget=DEFAULT_LETTER_BUDGET if budget is None else budget,
        verify=verify,
    )
