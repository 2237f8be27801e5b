"""Wheeler automata and Wheeler languages.

Automata are passed around as ``.aut`` text, words as plain strings.
"""

from ._wheeler import (
    BudgetExceeded,
    DepthExhausted,
    NotWheelerInput,
    ParseError,
    UsageError,
    WheelerError,
    accepts,
    canonicalize,
    check_order,
    colex_compare,
    determinize,
    enumerate_language,
    export_dot,
    gen_interval,
    gen_lm,
    gen_path,
    gen_star,
    is_primitive,
    is_wheeler_language,
    min_wdfa_from_dfa,
    minimize_dfa,
    minimize_wdfa,
    regex,
    sort,
    validate,
    wheeler_orders,
)

__all__ = [name for name in dir() if not name.startswith("_")]
