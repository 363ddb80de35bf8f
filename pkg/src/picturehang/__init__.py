"""Picture-hanging words: compile fall specifications, verify, and solve."""

from .circuits import (
    FormulaSyntaxError,
    MonotoneCircuit,
    PuzzleSpec,
    UnrealizableSpecError,
    circuit_table,
    eval_circuit,
    fold_constants,
    format_formula,
    parse_formula,
    spec_from_json,
    spec_to_json,
    subsets_to_circuit,
    validate_spec,
)
from .compiler import (
    BudgetExceededError,
    CompileReport,
    DEFAULT_LETTER_BUDGET,
    compile_circuit,
    estimate_length,
    gadget_and,
    gadget_or,
)
from .constructions import (
    build_disjoint,
    build_e,
    build_s,
    e_word_length,
    s_word_length,
)
from .puzzles import PuzzleFixture, fixture_by_id, load_fixtures
from .render import to_diagram
from .sortnet import (
    Comparator,
    ComparatorNetwork,
    batcher_network,
    build_k_of_n,
    network_to_circuit,
    sorts_all_zero_one,
    threshold_circuit,
)
from .spectator import (
    greedy_min_fell,
    max_survive_exact,
    min_fell_exact,
    set_cover_to_hanging,
)
from .words import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    EMPTY_WORD,
    ExhaustiveLimitError,
    Letter,
    NailSubset,
    Word,
    WordFormatError,
    commutator,
    concat,
    fall_table,
    falls,
    format_word,
    inverse,
    is_monotone_table,
    nail_counts,
    parse_word,
    power,
    reduce,
    remove_nails,
    word_from_json,
    word_to_json,
)

__version__ = "0.1.0"
