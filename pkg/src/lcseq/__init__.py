"""Exact relation algebra on log-concave sequences.

Synchronized, partially synchronized and weakly synchronized pairs of
log-concave sequences without internal zeros; executable checks of the
results that relate them; and a counterexample search harness.
"""
from .errors import (
    LCSeqError,
    LengthMismatch,
    NegativeHead,
    NegativeTerm,
    NotInL,
    ParseError,
    PremiseFails,
    WindowTooLarge,
    ZeroSequenceError,
)
from .relations import (
    RelationKind,
    RelationReport,
    Violation,
    f_pair,
    is_partially_synchronized,
    is_partially_synchronized_bruteforce,
    is_synchronized,
    is_weakly_synchronized,
    relation,
)
from .search import (
    ConjectureId,
    SearchConfig,
    SearchMode,
    Witness,
    enumerate_candidates,
    find_counterexample,
    make_witness,
    minimize_witness,
    verify_paper_example,
    verify_witness,
)
from .sequence import (
    ZERO,
    SeqClass,
    Sequence,
    add,
    classify,
    convolve,
    format_sequence,
    from_terms,
    has_internal_zeros,
    head_index,
    is_log_concave,
    lin_comb,
    parse_sequence,
    scale,
    tail_index,
    term,
)
from .theorems import (
    TheoremId,
    TheoremReport,
    check_hierarchy,
    check_triangle_transport,
    g_value,
    proof_trace,
    proof_trace_window,
    verify_convolution_preservation,
    verify_lincomb_logconcave,
    verify_lincomb_partial,
)

__version__ = "0.1.0"
