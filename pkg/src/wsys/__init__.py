"""wsys: weighted abstract modular systems.

A uniform semantic core for optimization-enabled propositional formalisms:
hard modules in sat/pl/lp/wc logics, weighted soft conditions with levels,
exhaustive optimal-model computation, an equivalence-preserving rewrite
catalog, encoders for the MaxSAT/MinSAT and MIN-ONE/DISTANCE-SAT families
and for logic programs with weak constraints, and a completion-based
translation of tight programs to partial weighted MaxSAT/MinSAT with WCNF
emission.
"""

from .model import (
    AMS,
    Atom,
    Clause,
    Interpretation,
    Program,
    PropFormula,
    Rule,
    Theory,
    Vocabulary,
    WCondition,
    WcBody,
    WSystem,
    and_,
    atom,
    canonical_order,
    iff,
    implies,
    level_slice,
    levels,
    not_,
    or_,
    prev_level,
    project,
)
from .logics import (
    all_interpretations,
    complement,
    equivalent,
    eval_clause,
    eval_formula,
    is_answer_set,
    least_model,
    reduct,
    satisfies,
    sigma_theory,
    weighted_eval,
)
from .solve import (
    DEFAULT_MAX_VARS,
    Sense,
    SolveReport,
    dominates,
    enumerate_models,
    l_optimal_models,
    level_sums,
    optimal_models,
    optimal_models_domination,
    optimal_models_recursive,
    solve_report,
)
from .transforms import (
    LevelFactors,
    drop_invariant_conditions,
    drop_zero_weights,
    eliminate_sign,
    flatten_levels,
    flip_single_condition,
    level_factors,
    negate_all_weights,
    normalize_levels,
    scale_weights,
    singular_rewrite,
    to_positively_singular,
)
from .encodings import (
    OProgram,
    PwProblem,
    WeakConstraint,
    desugar_minimize,
    distance_sat,
    distance_sat_subset,
    from_maxsat,
    from_oprogram,
    from_pw_sat,
    from_weighted_sat,
    min_one,
    min_one_asp,
    min_one_subset,
)
from .translate import (
    DependencyGraph,
    clausify,
    completion,
    dependency_graph,
    find_positive_cycle,
    is_tight,
    oprogram_to_pw,
)
from .formats import (
    SourceSpan,
    parse_lp,
    parse_wcnf,
    parse_wsystem,
    write_lp,
    write_wcnf,
    write_wsystem,
)
from .errors import (
    CapExceededError,
    ParseError,
    TightnessError,
    TransformError,
    VocabularyMismatchError,
    WsysError,
)

__version__ = "0.1.0"
