"""(k,g)-core computation, decomposition and coreness indexing for hypergraphs."""

from .compute import AuxMeter, epa, g_neighbours, memory_report, naive_kg_core, peak_aux_memory, support
from .decompose import (
    CorenessSkyline,
    DecompositionResult,
    bca,
    coreness_projections,
    deduplicate,
    load_index,
    query_core,
    save_index,
)
from .errors import ConfigError, DomainError, IndexValidationError, IndexVersionError, KGCoreError, ParseError
from .generator import GenConfig, SplitMix64, generate
from .hypergraph import (
    Hypergraph,
    SubhypergraphStats,
    dump_hypergraph,
    dumps_hypergraph,
    induced,
    load_hypergraph,
    loads_hypergraph,
    stats,
)
from .oracle import oracle_decompose, oracle_kg_core, toy_fixture

__version__ = "0.1.0"
