"""Compile monotone circuits into hanging words on the same n nails.

Both gate templates anchor on nails 1 and 2, which therefore play a double
role: they are ordinary removable nails and the glue of every gadget.

    AND(p, q) = p^2 x1 p^2 x1^-1 (q x2 q x2^-1)^-2
    OR(p, q)  = AND(AND([a, b], [a, b~]), AND([a~, b], [a~, b~]))
                with a = p x1 p x1^-1, a~ = p x1^-1 p x1,
                     b = q x2 q x2^-1, b~ = q x2^-1 q x2

Laid out with single-letter arguments the AND template has 14 letters (4
copies of p, 4 of q, 6 glue) and the OR template 1,078.  Two bookkeepings
of the OR expansion are exposed: the flat one counts 256 p-slots, 256
q-slots and 566 bare glue letters; the folded one walks the expansion and
tallies each conjugating bracket u a u a^-1 as one recursive unit plus
three glue letters, giving 256 units and 822 glue.  Length estimates use
the flat counts, since those bound the letters actually laid out when
reduced subwords are spliced into the template.

Since each gate multiplies length by at most the OR total, a circuit of
depth d compiles to at most 1078**d letters before reduction; reports
carry that ceiling alongside the per-circuit estimate.

Compilation reduces eagerly after every gadget, and by default the emitted
word is verified against the requested fall function over all 2^n subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .circuits import (
    Const,
    Gate,
    MonotoneCircuit,
    Node,
    PuzzleSpec,
    UnrealizableSpecError,
    Var,
    _walk,
    circuit_table,
    fold_constants,
    node_depth,
    validate_spec,
)
from .words import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    EMPTY_WORD,
    NailSubset,
    Word,
    fall_table,
    raw_concat,
    raw_inverse,
)

DEFAULT_LETTER_BUDGET = 10**7

# Above this much table work (2^n subsets times word length) auto-verification
# backs off and the report says so instead of silently burning minutes.
_AUTO_VERIFY_WORK = 300_000_000

_X1 = Word((1,), reduced=True)
_X1_INV = Word((-1,), reduced=True)
_X2 = Word((2,), reduced=True)
_X2_INV = Word((-2,), reduced=True)


class BudgetExceededError(ValueError):
    """Estimated output length exceeds the letter budget."""


def gadget_and(p: Word, q: Word) -> Word:
    """Word falling iff both argument words have fallen, reduced."""
    block = raw_inverse(raw_concat(q, _X2, q, _X2_INV))
    return raw_concat(p, p, _X1, p, p, _X1_INV, block, block).reduce()


def gadget_or(p: Word, q: Word) -> Word:
    """Word falling iff at least one argument word has fallen, reduced."""
    a = raw_concat(p, _X1, p, _X1_INV)
    a_flip = raw_concat(p, _X1_INV, p, _X1)
    b = raw_concat(q, _X2, q, _X2_INV)
    b_flip = raw_concat(q, _X2_INV, q, _X2)
    k11 = _commutator(a, b)
    k12 = _commutator(a, b_flip)
    k21 = _commutator(a_flip, b)
    k22 = _commutator(a_flip, b_flip)
    return gadget_and(gadget_and(k11, k12), gadget_and(k21, k22))


def _commutator(a: Word, b: Word) -> Word:
    return raw_concat(a, b, raw_inverse(a), raw_inverse(b)).reduce()


def and_splice_cost(len_p: int, len_q: int) -> int:
    return 4 * len_p + 4 * len_q + 6


def or_splice_cost(len_p: int, len_q: int) -> int:
    return 256 * len_p + 256 * len_q + 566


# --- template accounting --------------------------------------------------
#
# The templates are expanded symbolically: a token is either a glue letter
# (int, nail 1 or 2) or a marker ("P"/"Q", sign) standing for one copy of an
# argument word or its inverse.

_Token = Union[int, tuple[str, int]]


def _t_inv(tokens: list[_Token]) -> list[_Token]:
    return [
        -t if isinstance(t, int) else (t[0], -t[1])
        for t in reversed(tokens)
    ]


def _t_and(p: list[_Token], q: list[_Token]) -> list[_Token]:
    block = _t_inv(q + [2] + q + [-2])
    return p + p + [1] + p + p + [-1] + block + block


def _t_comm(a: list[_Token], b: list[_Token]) -> list[_Token]:
    return a + b + _t_inv(a) + _t_inv(b)


def and_template_tokens() -> list[_Token]:
    return _t_and([("P", 1)], [("Q", 1)])


def or_template_tokens() -> list[_Token]:
    p, q = [("P", 1)], [("Q", 1)]
    a = p + [1] + p + [-1]
    a_flip = p + [-1] + p + [1]
    b = q + [2] + q + [-2]
    b_flip = q + [-2] + q + [2]
    k11 = _t_comm(a, b)
    k12 = _t_comm(a, b_flip)
    k21 = _t_comm(a_flip, b)
    k22 = _t_comm(a_flip, b_flip)
    return _t_and(_t_and(k11, k12), _t_and(k21, k22))


@dataclass(frozen=True)
class TemplateCounts:
    recursive_units: int
    auxiliary_letters: int

    @property
    def total(self) -> int:
        return self.recursive_units + self.auxiliary_letters


def flat_counts(tokens: list[_Token]) -> tuple[int, int, int]:
    """(p-slots, q-slots, bare glue letters) of a template expansion."""
    p_slots = sum(1 for t in tokens if not isinstance(t, int) and t[0] == "P")
    q_slots = sum(1 for t in tokens if not isinstance(t, int) and t[0] == "Q")
    return p_slots, q_slots, len(tokens) - p_slots - q_slots


def folded_counts(tokens: list[_Token]) -> TemplateCounts:
    """Bracket-folded tally of a template expansion.

    Every argument marker in the templates sits inside a conjugating bracket
    u a u a^-1 (or its inverse a u a^-1 u).  Such a bracket is charged as one
    recursive unit; its other three letters, including the second copy of u,
    count as glue.  Letters outside brackets count singly.
    """
    units = 0
    aux = 0
    i = 0
    while i < len(tokens):
        window = tokens[i : i + 4]
        if _is_bracket(window):
            units += 1
            aux += 3
            i += 4
        elif isinstance(tokens[i], int):
            aux += 1
            i += 1
        else:
            units += 1
            i += 1
    return TemplateCounts(units, aux)


def _is_bracket(window: list[_Token]) -> bool:
    if len(window) < 4:
        return False
    a, b, c, d = window
    if not isinstance(a, int) and not isinstance(c, int):
        return a == c and isinstance(b, int) and isinstance(d, int) and d == -b
    if isinstance(a, int) and isinstance(c, int):
        return c == -a and not isinstance(b, int) and b == d
    return False


def estimate_length(c: MonotoneCircuit) -> int:
    """Upper bound on letters the compiler will lay out for this circuit.

    Per gate the flat template slot counts apply to the children's own
    estimates: an AND costs 4+4 slots plus 6 glue, an OR 256+256 plus 566.
    Shared subcircuits count once per occurrence, matching the splicing.
    """
    costs: dict[int, int] = {}
    for node in _walk(c.root):
        if isinstance(node, Var):
            costs[id(node)] = 1
        elif isinstance(node, Const):
            costs[id(node)] = 0
        elif node.op == "and":
            costs[id(node)] = and_splice_cost(costs[id(node.left)], costs[id(node.right)])
        else:
            costs[id(node)] = or_splice_cost(costs[id(node.left)], costs[id(node.right)])
    return costs[id(c.root)]


@dataclass(frozen=True)
class CompileReport:
    """What the compiler produced and how the emitted word checked out.

    ``as_constructed_length`` counts the letters laid out for the outermost
    gate before its closing reduction; ``reduced_length`` counts the final
    normal form.  ``verified`` is None when table verification was skipped
    (n beyond the limit, disabled, or past the auto-verification work cap);
    on a mismatch it is False and ``mismatch_mask`` holds the first subset
    bitmask where the word disagrees with the requested fall function.
    """

    word: Word
    n: int
    as_constructed_length: int
    reduced_length: int
    depth: int
    estimate: int
    bound: int
    verified: bool | None
    mismatch_mask: int | None
    notices: tuple[str, ...]


def compile_circuit(
    target: MonotoneCircuit | PuzzleSpec,
    budget: int | None = DEFAULT_LETTER_BUDGET,
    verify: bool | None = None,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> CompileReport:
    """Compile a circuit or spec to a word whose fall function realizes it.

    ``budget`` guards against runaway output; pass None to disable.
    ``verify`` forces (True) or skips (False) exhaustive table verification;
    the default verifies whenever n is within the exhaustive limit and the
    table work is affordable.
    """
    notices: list[str] = []
    expected_table = None
    if isinstance(target, PuzzleSpec):
        validation = validate_spec(target)
        notices.extend(validation.notices)
        spec = validation.spec
        n = spec.n
        circuit = spec.to_circuit()
        if n <= limit:
            expected_table = spec.table(limit)
    else:
        n = target.n
        circuit = target
    folded = fold_constants(circuit)
    estimate = estimate_length(folded)
    if isinstance(folded.root, Const):
        if not folded.root.value:
            raise UnrealizableSpecError(
                "circuit is constantly false: the picture could never fall"
            )
        if not isinstance(target, PuzzleSpec):
            notices.append("circuit is constantly true; compiles to the empty word")
        word = EMPTY_WORD
        as_constructed = 0
        depth = 0
    else:
        if budget is not None and estimate > budget:
            raise BudgetExceededError(
                f"estimated output of {estimate} letters exceeds the budget of "
                f"{budget}; raise or disable the budget to proceed"
            )
        if isinstance(folded.root, Gate) and n < 2:
            raise ValueError("gates anchor on nails 1 and 2, so compiling needs n >= 2")
        words = _compile_words(folded.root)
        word = words[id(folded.root)]
        as_constructed = _root_splice_length(folded.root, words)
        depth = node_depth(folded.root)
    reduced_length = len(word.letters)
    bound = 1078**depth
    verified: bool | None = None
    mismatch_mask: int | None = None
    if verify is None:
        verify_now = n <= limit and (1 << n) * max(reduced_length, 1) <= _AUTO_VERIFY_WORK
        if not verify_now:
            reason = (
                f"n={n} beyond the exhaustive limit {limit}"
                if n > limit
                else "past the auto-verification work cap"
            )
            notices.append(f"table verification skipped: {reason}")
    else:
        verify_now = verify
    if verify_now:
        if expected_table is None:
            expected_table = circuit_table(folded, limit)
        got_table = fall_table(word, n, limit)
        for mask, (want, got) in enumerate(zip(expected_table, got_table)):
            if want != got:
                verified = False
                mismatch_mask = mask
                subset = NailSubset(n, mask)
                notices.append(
                    f"fall table mismatch at subset {subset}: "
                    f"spec says {'fall' if want else 'hang'}, word says "
                    f"{'fall' if got else 'hang'}"
                )
                break
        else:
            verified = True
    return CompileReport(
        word=word,
        n=n,
        as_constructed_length=as_constructed,
        reduced_length=reduced_length,
        depth=depth,
        estimate=estimate,
        bound=bound,
        verified=verified,
        mismatch_mask=mismatch_mask,
        notices=tuple(notices),
    )


def _compile_words(root: Node) -> dict[int, Word]:
    words: dict[int, Word] = {}
    for node in _walk(root):
        if isinstance(node, Var):
            words[id(node)] = Word((node.index,), reduced=True)
        elif isinstance(node, Const):
            raise ValueError("constants must be folded away before compilation")
        elif node.op == "and":
            words[id(node)] = gadget_and(words[id(node.left)], words[id(node.right)])
        else:
            words[id(node)] = gadget_or(words[id(node.left)], words[id(node.right)])
    return words


def _root_splice_length(root: Node, words: dict[int, Word]) -> int:
    if not isinstance(root, Gate):
        return 1
    left = len(words[id(root.left)].letters)
    right = len(words[id(root.right)].letters)
    cost = and_splice_cost if root.op == "and" else or_splice_cost
    return cost(left, right)
