"""Seven-valued preference relations over weight polytopes.

Pairwise claims ("a is at least as good as b", or "a outranks b") are
tested against every admissible weight vector of several perspectives at
once - exactly via linear programs or vertex enumeration, or statistically
via uniform sampling - and the per-perspective verdicts combine into a
seven-valued relation that is then scored and ranked.
"""

from .model import (Criterion, PerformanceTable, Perspective, PrefsevenError,
                    ValidationError, Violation, WeightVector, utility,
                    validate_table)
from .polytope import (ConvexWitness, DegeneratePolytopeError,
                       EmptyPolytopeError, EnumerationLimitError,
                       LinearConstraint, Optimum, WeightPolytope,
                       build_ordinal_regression, build_perturbation,
                       conflicting_comparisons)
from .sevenlogic import (FourValue, RelationMatrix, SevenValue, ThreeValue,
                         TriValue, TruthLattice, belnap_classify,
                         coarsen_to_four, coarsen_to_three, combine)
from .verdict import (LPEvidence, OutrankingParams, PWIMatrix, SmaaEvidence,
                      TriVerdict, VertexEvidence, concordance,
                      first_flip_indices, pairwise_winning_index, smaa_matrix,
                      smaa_verdict, tri_from_pwi, tri_outranking_lp,
                      tri_outranking_vertices, tri_value_lp,
                      tri_value_vertices)
from .scoring import (CardCounts, GainLossScheme, ScoreBoard, basic_scheme,
                      deck_scheme, global_score, rank, ranking_string,
                      validate_scheme)
from .explain import Explanation, PerspectiveTrace, explain_pair, \
    render_narrative
from .estimator import SevenValuedRanking
from .service.config import SessionConfig, SmaaSettings
from .service.dataset import bundled_students, load_dataset, table_json
from .service.report import SessionReport, verify_report
from .service.sessions import (InfeasibleElicitationError,
                               SessionNotFoundError, SessionStateError,
                               SessionStore, run_pipeline, whatif)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "Criterion", "PerformanceTable", "Perspective", "PrefsevenError",
    "ValidationError", "Violation", "WeightVector", "utility",
    "validate_table",
    # polytope
    "ConvexWitness", "DegeneratePolytopeError", "EmptyPolytopeError",
    "EnumerationLimitError", "LinearConstraint", "Optimum", "WeightPolytope",
    "build_ordinal_regression", "build_perturbation",
    "conflicting_comparisons",
    # seven-valued logic
    "FourValue", "RelationMatrix", "SevenValue", "ThreeValue", "TriValue",
    "TruthLattice", "belnap_classify", "coarsen_to_four", "coarsen_to_three",
    "combine",
    # verdicts
    "LPEvidence", "OutrankingParams", "PWIMatrix", "SmaaEvidence",
    "TriVerdict", "VertexEvidence", "concordance", "first_flip_indices",
    "pairwise_winning_index", "smaa_matrix", "smaa_verdict", "tri_from_pwi",
    "tri_outranking_lp", "tri_outranking_vertices", "tri_value_lp",
    "tri_value_vertices",
    # scoring
    "CardCounts", "GainLossScheme", "ScoreBoard", "basic_scheme",
    "deck_scheme", "global_score", "rank", "ranking_string",
    "validate_scheme",
    # explanations
    "Explanation", "PerspectiveTrace", "explain_pair", "render_narrative",
    # estimator facade
    "SevenValuedRanking",
    # service
    "SessionConfig", "SmaaSettings", "bundled_students", "load_dataset",
    "table_json", "SessionReport", "verify_report",
    "InfeasibleElicitationError", "SessionNotFoundError", "SessionStateError",
    "SessionStore", "run_pipeline", "whatif",
]
