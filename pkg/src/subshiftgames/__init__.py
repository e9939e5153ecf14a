"""Word games on subshifts: winning sets, winning shifts and their entropy."""

from .automata import (
    AB,
    BINARY,
    Alphabet,
    AlphabetMismatch,
    Dfa,
    DfaFormatError,
    FiniteLanguage,
    count_words,
    digits,
    dfa_complement,
    dfa_complete,
    dfa_minimize,
    dfa_product,
    enumerate_words,
    essential_language,
    factor_closure,
    format_dfa,
    from_language,
    language_equal,
    language_included,
    parse_dfa,
    reverse,
)
from .entropy import (
    binomial_eps,
    entropy_spectral,
    entropy_word_count,
    extension_entropy,
    gap_root,
    lower_bound_check,
    spectral_radius,
    upper_bound_check,
)
from .langgames import (
    CapExceeded,
    GameResult,
    Strategy,
    counting_winning_set,
    format_language,
    parse_language,
    right_special_count,
    solve_game,
    verify_witness,
    winning_set,
)
from .regex import build_expected, parse_regex
from .winshift import (
    AlternatingAutomaton,
    alternating_from_dfa,
    two_directional_winning_shift,
    winning_language_dfa,
    winning_reversed_dfa,
    winning_shift,
)
from .zoo import (
    FIBONACCI,
    THUE_MORSE,
    Substitution,
    extend,
    gap_shift,
    golden_mean,
    named_shift,
    sft_from_forbidden,
    substitution_factors,
    zoo_shifts,
)

__version__ = "0.1.0"

__all__ = [
    "AB",
    "Alphabet",
    "AlphabetMismatch",
    "alternating_from_dfa",
    "AlternatingAutomaton",
    "BINARY",
    "build_expected",
    "binomial_eps",
    "CapExceeded",
    "count_words",
    "counting_winning_set",
    "Dfa",
    "dfa_complement",
    "dfa_complete",
    "dfa_minimize",
    "dfa_product",
    "DfaFormatError",
    "digits",
    "entropy_spectral",
    "entropy_word_count",
    "enumerate_words",
    "essential_language",
    "extend",
    "extension_entropy",
    "factor_closure",
    "FIBONACCI",
    "FiniteLanguage",
    "format_dfa",
    "format_language",
    "from_language",
    "GameResult",
    "gap_root",
    "gap_shift",
    "golden_mean",
    "language_equal",
    "language_included",
    "lower_bound_check",
    "named_shift",
    "parse_dfa",
    "parse_regex",
    "parse_language",
    "reverse",
    "right_special_count",
    "sft_from_forbidden",
    "solve_game",
    "spectral_radius",
    "Strategy",
    "Substitution",
    "substitution_factors",
    "THUE_MORSE",
    "two_directional_winning_shift",
    "upper_bound_check",
    "verify_witness",
    "winning_language_dfa",
    "winning_reversed_dfa",
    "winning_set",
    "winning_shift",
    "zoo_shifts",
]
