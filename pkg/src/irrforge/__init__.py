"""irrforge: an exact-arithmetic workbench for tree irregularity.

Computes edge-difference irregularity indices, builds and enumerates trees
with prescribed degree sequences, searches for extremal realizations, and
evaluates a catalog of claimed inequalities into machine-readable verdicts,
including systematic counterexample scans.
"""

from .bounds import (
    HOLDS,
    NOT_APPLICABLE,
    UNDEFINED,
    VIOLATED,
    BoundRecord,
    EngineOptions,
    Instance,
    Verdict,
    catalog,
    catalog_ids,
    evaluate_all,
    evaluate_bound,
    lookup,
    series_lhs,
    series_rhs,
    verdict_from_json,
    verdict_to_json,
)
from .caterpillar import (
    BackboneArrangement,
    build_caterpillar,
    closed_form_irr,
    conditioned_star,
    five_term_irr,
)
from .errors import (
    BadIndex,
    BadLabel,
    CapExceeded,
    CycleOrDisconnected,
    DegenerateDenominator,
    InputNotViolated,
    InvalidArrangement,
    IrrforgeError,
    NoValidArrangement,
    NotRealizable,
    NotSorted,
    TooLarge,
    WrongArity,
)
from .exactval import Exact, format_exact, parse_exact
from .extremal import (
    ExtremalResult,
    GreedyComparison,
    Interpretation,
    compare_greedy_to_bruteforce,
    extremal_over_arrangements,
    extremal_over_realizations,
    min_adjacency_arrangement,
)
from .falsify import Counterexample, Family, ScanReport, SearchSpace, scan, shrink
from .report import (
    STAR_FIXTURE,
    TABLE1_FIXTURE,
    TABLE2_FIXTURE,
    assert_fixture_integrity,
    compute_L_values,
    reproduce_table2_alpha_beta,
    reproduce_tables,
)
from .treegen import (
    CanonicalCode,
    PruferCode,
    all_unlabeled_trees,
    canonical_form,
    count_labeled_trees,
    enumerate_labeled_trees,
    enumerate_unlabeled_trees,
    greedy_tree,
    prufer_decode,
    prufer_encode,
    random_tree,
)
from .trees import (
    DegreeSequence,
    DegreeStats,
    Tree,
    albertson_index,
    degree_sequence_of,
    format_edge_list,
    is_tree_realizable,
    make_tree,
    parse_degrees,
    parse_edge_list,
    sigma_index,
    total_irregularity,
    variance_form,
)

__version__ = "0.1.0"
