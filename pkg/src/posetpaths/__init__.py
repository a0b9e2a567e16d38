"""Monotone numberings of posets, their symmetry groups, and central measures.

The library materializes four layers:

* finite posets and windows of the canonical infinite families, with
  ideal operations and numbering enumeration (`posets`, `ideals`);
* the graded graph of finite ideals with exact path counts
  (`graded_graph`);
* the adjacent-swap involutions on numberings and the permutation group
  they generate, with relation verification (`symmetry`);
* central measures: exact endpoint-conditioned kernels, centrality
  checks, Plancherel and row-insertion growth samplers, and frequency
  estimation (`measures`, `young`).
"""

from .graded_graph import (
    GradedGraph,
    LevelVertex,
    build_graph,
    dimension,
    numbering_of,
    path_of,
    up_dimension,
    up_dimension_table,
)
from .ideals import (
    AxisRaysIdeal,
    FiniteSetIdeal,
    FullIdeal,
    HookIdeal,
    IdealSpec,
    check_downward_closed,
    finite_set_ideal,
    ideal_member,
    parse_ideal,
)
from .measures import (
    CentralityReport,
    ComparisonTable,
    ExplicitMarkov,
    FrequencyReport,
    PlancherelYoung,
    RSKThoma,
    compare_frequency_profiles,
    endpoint_measure,
    estimate_frequency,
    growth_to_numbering,
    is_central,
    parse_markov_kernel,
    path_measure,
    perturb_fiber,
    plancherel_transition,
    sample_markov,
    sample_plancherel,
    sample_rsk_thoma,
    uniform_path_measure,
)
from .posets import (
    CapExceeded,
    Element,
    PathNumbering,
    Poset,
    PosetFormatError,
    PosetWindow,
    ROOT,
    addable_elements,
    build_antichain_poset,
    build_box_poset,
    build_chain_poset,
    build_young_poset,
    enumerate_numberings,
    parse_poset,
    serialize_poset,
    validate_numbering,
)
from .symmetry import (
    GroupHandle,
    LocalGroupReport,
    RelationReport,
    apply_sigma,
    classify_local,
    endpoint_fibers,
    generate_group,
    group_order,
    local_indices,
    orbit,
    verify_relations,
)
from .young import GrowthPath, tableau_count, tableau_count_recursive

__version__ = "0.1.0"
