"""Monotone Boolean circuits over removal variables r1..rn.

A circuit decides, for each subset of removed nails, whether the picture
should fall.  Variables are 1-based: r_i is true iff nail i was removed.
Only AND and OR gates are allowed, so every circuit is monotone by shape.
Constants may appear while building (sorting-network padding) but are
folded away before anything downstream sees the circuit.

Specs come in three bodies: an explicit list of felling subsets, a formula,
or a threshold k (fall iff at least k nails removed).  All three share one
JSON envelope keyed by "subsets", "formula" or "threshold_k".
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import DEFAULT_EXHAUSTIVE_LIMIT, ExhaustiveLimitError, NailSubset


class FormulaSyntaxError(ValueError):
    """Formula rejected; ``position`` is the character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnrealizableSpecError(ValueError):
    """The requested fall function cannot be realized by any hanging."""


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Gate:
    op: str
    left: "Node"
    right: "Node"


Node = Var | Const | Gate

TRUE = Const(True)
FALSE = Const(False)


def make_and(a: Node, b: Node) -> Node:
    """AND with constants folded on the spot."""
    if isinstance(a, Const):
        return b if a.value else FALSE
    if isinstance(b, Const):
        return a if b.value else FALSE
    return Gate("and", a, b)


def make_or(a: Node, b: Node) -> Node:
    """OR with constants folded on the spot."""
    if isinstance(a, Const):
        return TRUE if a.value else b
    if isinstance(b, Const):
        return TRUE if b.value else a
    return Gate("or", a, b)


def _walk(root: Node):
    """Postorder over distinct nodes (shared subcircuits visited once)."""
    seen: set[int] = set()
    stack: list[tuple[Node, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in seen:
            continue
        if expanded or not isinstance(node, Gate):
            seen.add(id(node))
            yield node
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))


@dataclass(frozen=True)
class MonotoneCircuit:
    """A circuit root plus the number of nails n it speaks about."""

    n: int
    root: Node

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("circuits speak about nails 1..n, so n >= 1 is required")
        for node in _walk(self.root):
            if isinstance(node, Var) and not 1 <= node.index <= self.n:
                raise ValueError(f"variable r{node.index} out of range 1..{self.n}")
            if isinstance(node, Gate) and node.op not in ("and", "or"):
                raise ValueError(f"unknown gate op {node.op!r}")

    @property
    def gate_count(self) -> int:
        return sum(1 for node in _walk(self.root) if isinstance(node, Gate))

    @property
    def depth(self) -> int:
        return node_depth(self.root)


def node_depth(root: Node) -> int:
    depths: dict[int, int] = {}
    for node in _walk(root):
        if isinstance(node, Gate):
            depths[id(node)] = 1 + max(depths[id(node.left)], depths[id(node.right)])
        else:
            depths[id(node)] = 0
    return depths[id(root)]


def eval_circuit(c: MonotoneCircuit, removed: NailSubset | Iterable[int]) -> bool:
    if isinstance(removed, NailSubset):
        mask = removed.mask
    else:
        mask = 0
        for i in removed:
            mask |= 1 << (i - 1)
    vals: dict[int, bool] = {}
    for node in _walk(c.root):
        if isinstance(node, Var):
            vals[id(node)] = bool((mask >> (node.index - 1)) & 1)
        elif isinstance(node, Const):
            vals[id(node)] = node.value
        elif node.op == "and":
            vals[id(node)] = vals[id(node.left)] and vals[id(node.right)]
        else:
            vals[id(node)] = vals[id(node.left)] or vals[id(node.right)]
    return vals[id(c.root)]


def circuit_table(c: MonotoneCircuit, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> list[bool]:
    """Truth value for every removal bitmask 0..2^n-1.

    Evaluates all subsets at once: each node's table is packed into one big
    integer with bit `mask` holding the node value under that removal set.
    """
    if c.n > limit:
        raise ExhaustiveLimitError(
            f"circuit_table over n={c.n} enumerates 2^{c.n} subsets, beyond the "
            f"exhaustive limit {limit}; pass limit={c.n} to allow it"
        )
    size = 1 << c.n
    all_ones = (1 << size) - 1
    packs: dict[int, int] = {}
    for node in _walk(c.root):
        if isinstance(node, Var):
            packs[id(node)] = _var_pack(node.index, c.n)
        elif isinstance(node, Const):
            packs[id(node)] = all_ones if node.value else 0
        elif node.op == "and":
            packs[id(node)] = packs[id(node.left)] & packs[id(node.right)]
        else:
            packs[id(node)] = packs[id(node.left)] | packs[id(node.right)]
    pack = packs[id(c.root)]
    return [bool((pack >> mask) & 1) for mask in range(size)]


def _var_pack(index: int, n: int) -> int:
    period = 1 << (index - 1)
    pack = ((1 << period) - 1) << period
    width = period << 1
    size = 1 << n
    while width < size:
        pack |= pack << width
        width <<= 1
    return pack


def fold_constants(c: MonotoneCircuit) -> MonotoneCircuit:
    """Rebuild with constant inputs absorbed; only a constant root survives."""
    folded: dict[int, Node] = {}
    for node in _walk(c.root):
        if isinstance(node, Gate):
            left, right = folded[id(node.left)], folded[id(node.right)]
            make = make_and if node.op == "and" else make_or
            folded[id(node)] = make(left, right)
        else:
            folded[id(node)] = node
    return MonotoneCircuit(c.n, folded[id(c.root)])


def balanced_tree(op: str, leaves: Sequence[Node]) -> Node:
    """Balanced gate tree over the leaves; first half rounds up."""
    if not leaves:
        raise ValueError("balanced_tree needs at least one leaf")
    if len(leaves) == 1:
        return leaves[0]
    half = (len(leaves) + 1) // 2
    return Gate(op, balanced_tree(op, leaves[:half]), balanced_tree(op, leaves[half:]))


def subsets_to_circuit(subsets: Sequence[Iterable[int]], n: int) -> MonotoneCircuit:
    """Balanced OR of balanced ANDs: true iff some listed subset is fully removed."""
    groups = [sorted(set(s)) for s in subsets]
    if not groups:
        raise ValueError("need at least one felling subset")
    for group in groups:
        if not group:
            raise ValueError("felling subsets must be nonempty")
        for i in group:
            if not 1 <= i <= n:
                raise ValueError(f"nail {i} out of range 1..{n}")
    terms = [balanced_tree("and", [Var(i) for i in group]) for group in groups]
    return MonotoneCircuit(n, balanced_tree("or", terms))


# --- formula text ---------------------------------------------------------

_TOKEN_RE = re.compile(r"r(\d+)|atleast\b|\d+|[&|();,]")


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens: list[tuple[str, int, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        lexeme = m.group(0)
        if m.group(1) is not None:
            tokens.append(("var", int(m.group(1)), pos))
        elif lexeme == "atleast":
            tokens.append(("atleast", 0, pos))
        elif lexeme.isdigit():
            tokens.append(("int", int(lexeme), pos))
        else:
            tokens.append((lexeme, 0, pos))
        pos = m.end()
    tokens.append(("end", 0, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, int, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, int, int]:
        token = self.tokens[self.i]
        if token[0] != kind:
            raise FormulaSyntaxError(f"expected {kind!r}, found {token[0]!r}", token[2])
        self.i += 1
        return token

    def parse(self) -> Node:
        node = self.expr()
        token = self.peek()
        if token[0] != "end":
            raise FormulaSyntaxError(f"unexpected {token[0]!r} after formula", token[2])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] == "|":
            self.take("|")
            node = make_or(node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] == "&":
            self.take("&")
            node = make_and(node, self.factor())
        return node

    def factor(self) -> Node:
        kind, value, pos = self.peek()
        if kind == "var":
            self.i += 1
            if value < 1:
                raise FormulaSyntaxError(f"variable r{value}: indices are 1-based", pos)
            return Var(value)
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "atleast":
            return self.atleast()
        raise FormulaSyntaxError(f"expected a variable, '(' or 'atleast', found {kind!r}", pos)

    def atleast(self) -> Node:
        _, _, start = self.take("atleast")
        self.take("(")
        _, k, kpos = self.take("int")
        self.take(";")
        indices = [self._atleast_var()]
        while self.peek()[0] == ",":
            self.take(",")
            indices.append(self._atleast_var())
        self.take(")")
        if len(set(indices)) != len(indices):
            raise FormulaSyntaxError("atleast variables must be distinct", start)
        if not 0 <= k <= len(indices):
            raise FormulaSyntaxError(
                f"atleast({k}; ...) out of range 0..{len(indices)}", kpos
            )
        from .sortnet import threshold_over

        return threshold_over(k, [Var(i) for i in indices])

    def _atleast_var(self) -> int:
        _, value, pos = self.take("var")
        if value < 1:
            raise FormulaSyntaxError(f"variable r{value}: indices are 1-based", pos)
        return value


def parse_formula(text: str, n: int | None = None) -> MonotoneCircuit:
    """Parse `r<k>`, `&`, `|`, parentheses and the atleast(k; ...) macro.

    `&` binds tighter than `|`; both chain to the left.  If n is omitted it
    defaults to the largest variable index mentioned.
    """
    root = _Parser(text).parse()
    max_var = max(
        (node.index for node in _walk(root) if isinstance(node, Var)), default=0
    )
    if n is None:
        n = max_var
    if max_var > n:
        raise FormulaSyntaxError(f"variable r{max_var} exceeds n={n}", 0)
    return MonotoneCircuit(n, root)


def format_formula(c: MonotoneCircuit) -> str:
    """Render a circuit back to formula text, parenthesizing only where needed."""

    def fmt(node: Node, parent: str) -> str:
        if isinstance(node, Var):
            return f"r{node.index}"
        if isinstance(node, Const):
            return "true" if node.value else "false"
        body = f"{fmt(node.left, node.op)} {'&' if node.op == 'and' else '|'} {fmt(node.right, node.op)}"
        if parent == "and" and node.op == "or":
            return f"({body})"
        return body

    return fmt(c.root, "or")


# --- puzzle specs ---------------------------------------------------------


@dataclass(frozen=True)
class PuzzleSpec:
    """A fall specification: subsets, formula or threshold, over nails 1..n."""

    n: int
    subsets: tuple[frozenset[int], ...] | None = None
    formula: str | None = None
    circuit: MonotoneCircuit | None = field(default=None, compare=False)
    threshold_k: int | None = None

    def __post_init__(self) -> None:
        bodies = sum(x is not None for x in (self.subsets, self.formula, self.threshold_k))
        if bodies != 1:
            raise ValueError("spec needs exactly one of subsets, formula, threshold_k")

    @classmethod
    def from_subsets(cls, n: int, subsets: Sequence[Iterable[int]]) -> "PuzzleSpec":
        return cls(n=n, subsets=tuple(frozenset(s) for s in subsets))

    @classmethod
    def from_formula(cls, n: int, formula: str) -> "PuzzleSpec":
        return cls(n=n, formula=formula, circuit=parse_formula(formula, n))

    @classmethod
    def from_threshold(cls, n: int, k: int) -> "PuzzleSpec":
        return cls(n=n, threshold_k=k)

    def to_circuit(self) -> MonotoneCircuit:
        if self.subsets is not None:
            return subsets_to_circuit([sorted(s) for s in self.subsets], self.n)
        if self.threshold_k is not None:
            from .sortnet import threshold_circuit

            return threshold_circuit(self.threshold_k, self.n)
        if self.circuit is not None:
            return self.circuit
        return parse_formula(self.formula or "", self.n)

    def table(self, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> list[bool]:
        """Reference truth table straight from the spec body, no circuitry."""
        if self.n > limit:
            raise ExhaustiveLimitError(
                f"spec table over n={self.n} exceeds the exhaustive limit {limit}"
            )
        size = 1 << self.n
        if self.threshold_k is not None:
            return [bin(mask).count("1") >= self.threshold_k for mask in range(size)]
        if self.subsets is not None:
            masks = [sum(1 << (i - 1) for i in s) for s in self.subsets]
            return [any(mask & m == m for m in masks) for mask in range(size)]
        return circuit_table(self.to_circuit(), limit)


def spec_to_json(spec: PuzzleSpec) -> str:
    data: dict = {"n": spec.n}
    if spec.subsets is not None:
        data["subsets"] = sorted(sorted(s) for s in spec.subsets)
    elif spec.threshold_k is not None:
        data["threshold_k"] = spec.threshold_k
    else:
        data["formula"] = spec.formula
    return json.dumps(data)


def spec_from_json(text: str) -> PuzzleSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad spec JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise ValueError('spec JSON must be an object with an integer "n"')
    n = data["n"]
    bodies = [k for k in ("subsets", "formula", "threshold_k") if k in data]
    if len(bodies) != 1:
        raise ValueError('spec JSON needs exactly one of "subsets", "formula", "threshold_k"')
    if bodies[0] == "subsets":
        subsets = data["subsets"]
        ok = isinstance(subsets, list) and all(
            isinstance(s, list) and all(isinstance(i, int) and i >= 1 for i in s)
            for s in subsets
        )
        if not ok:
            raise ValueError('"subsets" must be a list of lists of nail indices >= 1')
        return PuzzleSpec.from_subsets(n, subsets)
    if bodies[0] == "threshold_k":
        if not isinstance(data["threshold_k"], int):
            raise ValueError('"threshold_k" must be an integer')
        return PuzzleSpec.from_threshold(n, data["threshold_k"])
    if not isinstance(data["formula"], str):
        raise ValueError('"formula" must be a string')
    return PuzzleSpec.from_formula(n, data["formula"])


@dataclass(frozen=True)
class SpecValidation:
    spec: PuzzleSpec
    notices: tuple[str, ...]


def validate_spec(spec: PuzzleSpec) -> SpecValidation:
    """Check realizability and normalize; raises UnrealizableSpecError.

    Subset lists are normalized to antichains: duplicates and supersets of
    other listed subsets are dropped, each with a notice.
    """
    if spec.n < 1:
        raise ValueError("spec needs n >= 1")
    notices: list[str] = []
    if spec.threshold_k is not None:
        k = spec.threshold_k
        if k < 0:
            raise ValueError(f"threshold k={k} must be nonnegative")
        if k > spec.n:
            raise UnrealizableSpecError(
                f"threshold k={k} exceeds n={spec.n}: the picture could never fall"
            )
        if k == 0:
            notices.append("threshold 0 falls for every subset; compiles to the empty word")
        return SpecValidation(spec, tuple(notices))
    if spec.subsets is not None:
        for s in spec.subsets:
            if not s:
                raise ValueError("felling subsets must be nonempty")
            for i in s:
                if not 1 <= i <= spec.n:
                    raise ValueError(f"nail {i} out of range 1..{spec.n}")
        kept: list[frozenset[int]] = []
        seen: set[frozenset[int]] = set()
        for s in spec.subsets:
            if s in seen:
                notices.append(f"dropped duplicate subset {sorted(s)}")
                continue
            seen.add(s)
            if any(other < s for other in spec.subsets):
                notices.append(f"dropped subset {sorted(s)}: superset of another listed subset")
                continue
            kept.append(s)
        if not kept:
            raise ValueError("no felling subsets left after normalization")
        normalized = PuzzleSpec.from_subsets(spec.n, [sorted(s) for s in kept])
        return SpecValidation(normalized, tuple(notices))
    circuit = fold_constants(spec.to_circuit())
    if isinstance(circuit.root, Const):
        if not circuit.root.value:
            raise UnrealizableSpecError(
                "formula is constantly false: the picture could never fall"
            )
        notices.append("formula is constantly true; compiles to the empty word")
    return SpecValidation(spec, tuple(notices))
