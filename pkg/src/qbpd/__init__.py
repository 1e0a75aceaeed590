"""Quantum bumpless pipe dreams and quantum double Schubert polynomials.

Exact enumeration of the diagrams of a permutation by droop/lift move
closure, their signed binomial weight sum, independent algebraic oracles
for the same polynomials, and the cancellation statistics of the formula.
"""

from .analysis import (
    CancellationStats,
    SweepSummary,
    WeightCells,
    bwt,
    cancellation_stats,
    is_cancellation_free,
    is_classical_bpd,
    qbpd_polynomial,
    stats_for_group,
    sweep,
    verify_transition,
    weight_cells,
    wt,
)
from .diagram import (
    Diagram,
    PipeStep,
    PipeTrace,
    TileKind,
    canonical_key,
    diagram_from_text,
    diagram_to_text,
    domino_pairings,
    embed_diagram,
    extract_permutation,
    restrict_diagram,
    rothe_diagram,
    trace_pipes,
    validate,
)
from .moves import (
    RectMove,
    apply_droop,
    apply_lift,
    brute_force_enumerate,
    enumerate_qbpds,
    enumerate_unpaired,
)
from .oracle import (
    divided_difference_chain,
    double_schubert_defining,
    monk_residual,
    q_interval,
    quantum_double_schubert_defining,
    quantum_double_schubert_transition,
    quantum_e,
)
from .perm import (
    Permutation,
    TransitionData,
    embed,
    enumerate_symmetric_group,
    is_bruhat_cover,
    is_quantum_lower,
    length,
    make_permutation,
    parse_permutation,
    reduced_word,
    right_multiply_transposition,
    transition_setup,
)
from .polyring import Monomial, Poly

__version__ = "0.1.0"
