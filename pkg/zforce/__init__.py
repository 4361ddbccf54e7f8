"""zforce - zero forcing sets, forts and minimal zero forcing set analysis for small graphs"""
# Re-export the public API
from .config import Limits, configure, get_limits, override_limits
from .errors import (
    CapExceededError,
    ConfigError,
    ConstructionError,
    FamilyError,
    FormatError,
    GraphError,
    NotZeroForcingError,
    UnknownClaimError,
    UsageError,
    ZforceError,
)
from .graph import (
    ComponentDecomposition,
    Graph,
    VertexSet,
    add_universal_vertex,
    build_graph,
    cartesian_product,
    components,
    corona,
    degree,
    delete_vertex,
    disjoint_union,
    family_names,
    generate,
    isolates,
    is_universal,
    join,
    neighbors,
)
from .forcing import ClosureResult, ForceStep, closure, is_zero_forcing_set, reversal
from .forts import Fort, FortCollection, enumerate_forts, is_cover, is_fort, is_minimal_cover
from .minimal import (
    ZfsSummary,
    count_minimal_zfs,
    enumerate_minimal_zfs,
    every_zfs_contains_minimum,
    in_every_minimal_zfs,
    is_minimal_zfs,
    max_minimal_zfs,
    shrink_to_minimal,
    summarize,
    zero_forcing_number,
)
from .constructions import (
    canonical_form,
    counterexample_graph,
    enumerate_all_graphs,
    gap_family,
    prism_witness_sets,
    spider_witness_sets,
    universal_chain_step,
)
from .claims import VerificationReport, claim_ids, verify_claim
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6

__version__ = "0.1.0"

__all__ = [
    'CapExceededError',
    'ClosureResult',
    'ComponentDecomposition',
    'ConfigError',
    'ConstructionError',
    'FamilyError',
    'ForceStep',
    'FormatError',
    'Fort',
    'FortCollection',
    'Graph',
    'GraphError',
    'Limits',
    'NotZeroForcingError',
    'UnknownClaimError',
    'UsageError',
    'VerificationReport',
    'VertexSet',
    'ZfsSummary',
    'ZforceError',
    'add_universal_vertex',
    'build_graph',
    'canonical_form',
    'cartesian_product',
    'claim_ids',
    'closure',
    'components',
    'configure',
    'corona',
    'count_minimal_zfs',
    'counterexample_graph',
    'degree',
    'delete_vertex',
    'disjoint_union',
    'enumerate_all_graphs',
    'enumerate_forts',
    'enumerate_minimal_zfs',
    'every_zfs_contains_minimum',
    'family_names',
    'gap_family',
    'generate',
    'get_limits',
    'in_every_minimal_zfs',
    'is_cover',
    'is_fort',
    'is_minimal_cover',
    'is_minimal_zfs',
    'is_universal',
    'is_zero_forcing_set',
    'isolates',
    'join',
    'max_minimal_zfs',
    'neighbors',
    'override_limits',
    'parse_edge_list',
    'parse_graph6',
    'prism_witness_sets',
    'reversal',
    'shrink_to_minimal',
    'spider_witness_sets',
    'summarize',
    'universal_chain_step',
    'verify_claim',
    'write_edge_list',
    'write_graph6',
    'zero_forcing_number',
]
