"""Exact reduced-state purities and Concentratable Entanglement of graph states."""

from .gf2 import GF2Matrix, GF2Vector, kernel_dim, mat_vec, rank
from .graphs import (
    Graph,
    QubitSet,
    biadjacency,
    canonical_form,
    family,
    from_edges,
    is_connected,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .metrics import (
    CEReport,
    DyadicRational,
    PuritySpectrum,
    RankIndex,
    ce_bounds,
    ce_report,
    concentratable_entanglement,
    purity,
    purity_spectrum,
    rank_index,
    schmidt_rank,
    snowflake_subset_ce,
)
from .stabilizer import (
    OutcomeBitstring,
    PauliGenerator,
    StabilizerTableau,
    count_distinct_sets,
    count_distinct_sets_fast,
    graph_generators,
    measure_z,
    traced_generator_set,
    unitary_support,
)
from .survey import (
    SurveyRecord,
    ce_survey,
    distinct_ce_values,
    enumerate_connected,
    family_sweep,
    max_achievers,
)

__version__ = "0.1.0"

__all__ = [
    "GF2Matrix",
    "GF2Vector",
    "kernel_dim",
    "mat_vec",
    "rank",
    "Graph",
    "QubitSet",
    "biadjacency",
    "canonical_form",
    "family",
    "from_edges",
    "is_connected",
    "neighborhood",
    "parse_edge_list",
    "parse_graph6",
    "write_edge_list",
    "write_graph6",
    "CEReport",
    "DyadicRational",
    "PuritySpectrum",
    "RankIndex",
    "ce_bounds",
    "ce_report",
    "concentratable_entanglement",
    "purity",
    "purity_spectrum",
    "rank_index",
    "schmidt_rank",
    "snowflake_subset_ce",
    "OutcomeBitstring",
    "PauliGenerator",
    "StabilizerTableau",
    "count_distinct_sets",
    "count_distinct_sets_fast",
    "graph_generators",
    "measure_z",
    "traced_generator_set",
    "unitary_support",
    "SurveyRecord",
    "ce_survey",
    "distinct_ce_values",
    "enumerate_connected",
    "family_sweep",
    "max_achievers",
    "__version__",
]
