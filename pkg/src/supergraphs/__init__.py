"""Super graphs on finite groups.

Nine graphs per group (power / enhanced power / commuting bases under the
equality / conjugacy / order relations), dominant-vertex reduction, theorem
verification over a group catalog, and a symbolic order-quotient engine that
analyses the reduced order super commuting graphs of the symmetric and
alternating families far beyond explicit enumeration.
"""

from .analysis import (
    INFINITE,
    ComponentReport,
    CompletenessVerdict,
    EqualityVerdict,
    components,
    diameter,
    dominant_vertices,
    equality_report,
    graphs_equal,
    reduced_graph,
    summary_csv,
    verify_completeness,
    verify_equality_theorems,
)
from .catalog import (
    GroupCatalog,
    ManifestError,
    default_catalog,
    default_catalog_labels,
    load_manifest,
    parse_group_label,
)
from .errors import BudgetExceededError, HypothesisViolationError
from .graphs import (
    ALL_KINDS,
    DenseGraph,
    GraphKind,
    adjacency_bit_text,
    build_all_kinds,
    build_graph,
    commuting_graph,
    enhanced_power_graph,
    order_super_commuting_graph,
    power_graph,
    super_graph,
    to_dot,
)
from .groups import (
    DEFAULT_BUDGET,
    GroupTable,
    Partition,
    all_commuting_pairs_generate_cyclic,
    all_cyclic_subgroups_prime_power,
    conjugacy_partition,
    direct_product,
    equality_partition,
    from_generators,
    in_cyclic_subgroup,
    is_prime_power,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_symmetric,
    order_partition,
)
from .spectrum import (
    DEFAULT_SPECTRUM_CAP,
    OrderQuotientGraph,
    OrderSpectrum,
    alternating_support,
    dominant_orders,
    order_class_sizes,
    prime_window_count,
    PRIME_WINDOW_STAGES,
    primes_up_to,
    quotient_components,
    quotient_diameter,
    quotient_graph,
    spectrum_alternating,
    spectrum_explicit,
    spectrum_symmetric,
    symmetric_support,
    with_exact_class_sizes,
)
from .witnesses import (
    ConnectivityPrediction,
    ScanRow,
    WitnessPair,
    analyze_degree,
    conjecture_scan,
    find_T_prime,
    is_valid_complement,
    predict_connectivity,
    scan_csv,
    search_witness,
)

__version__ = "0.1.0"
