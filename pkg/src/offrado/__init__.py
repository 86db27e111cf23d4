"""Two-color off-diagonal Rado numbers for x+y+c=z and x+q*y=z.

The library decides, for a pair of linear equations, the smallest N such
that every red/blue coloring of [1, N] contains a red solution of the
first equation or a blue solution of the second.  It combines an
exhaustive propagation-assisted search with a closed form for the
(x+y+c=z, x+q*y=z) family, extremal colorings proving the lower bounds,
periodic certificates proving infinitude, and replayable forcing chains
for the upper-bound case analysis.
"""

from .certificates import (
    ConstructionSpec,
    FiniteOrInfinite,
    INFINITE,
    PeriodicCertificate,
    Report,
    certify,
    check_periodic_certificate,
    closed_form,
    extremal_coloring,
    extremal_coloring_q1,
    find_periodic_certificate,
    formula_for_pair,
)
from .coloring import (
    Color,
    Coloring,
    PartialColoring,
    Verdict,
    Violation,
    is_valid_coloring,
    restrict_periodic,
)
from .equations import (
    EquationSyntaxError,
    LinearEquation,
    SolutionTriple,
    c_equation,
    eval_triple,
    parse_equation,
    q_equation,
    solutions_in_range,
    triples_containing,
)
from .proofchain import (
    AffineExpr,
    Chain,
    ChainStep,
    DivisibilityError,
    FailureReason,
    ReplayResult,
    ReplaySuccess,
    StepFailure,
    TerminalMismatch,
    chain_by_id,
    load_chain_fixtures,
    replay_chain,
)
from .solver import (
    ALGORITHM_VERSION,
    Conflict,
    Finite,
    ForcedAssignment,
    InfiniteCertified,
    Progress,
    ResourceLimitError,
    SearchResult,
    Unknown,
    Unsat,
    Witness,
    compute_rado,
    exhaustive_check,
    propagate,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_VERSION",
    "AffineExpr",
    "Chain",
    "ChainStep",
    "Color",
    "Coloring",
    "Conflict",
    "ConstructionSpec",
    "DivisibilityError",
    "EquationSyntaxError",
    "FailureReason",
    "Finite",
    "FiniteOrInfinite",
    "ForcedAssignment",
    "INFINITE",
    "InfiniteCertified",
    "LinearEquation",
    "PartialColoring",
    "PeriodicCertificate",
    "Progress",
    "Report",
    "ReplayResult",
    "ReplaySuccess",
    "ResourceLimitError",
    "SearchResult",
    "SolutionTriple",
    "StepFailure",
    "TerminalMismatch",
    "Unknown",
    "Unsat",
    "Verdict",
    "Violation",
    "Witness",
    "c_equation",
    "certify",
    "chain_by_id",
    "check_periodic_certificate",
    "closed_form",
    "compute_rado",
    "eval_triple",
    "exhaustive_check",
    "extremal_coloring",
    "extremal_coloring_q1",
    "find_periodic_certificate",
    "formula_for_pair",
    "is_valid_coloring",
    "load_chain_fixtures",
    "parse_equation",
    "propagate",
    "q_equation",
    "replay_chain",
    "restrict_periodic",
    "solutions_in_range",
    "triples_containing",
]
