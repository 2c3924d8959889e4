"""Order dimension of finite posets: exact solver, block decomposition,
and realizer merging."""

from .blocks import (
    BlockDecomposition,
    Tail,
    block_decomposition,
    components,
    cover_graph,
    is_connected,
    tail,
)
from .core import (
    IncPair,
    Poset,
    all_linear_extensions,
    cover_relation,
    incomparable_pairs,
    is_convex,
    is_linear_extension,
    linear_extension_of,
    poset_from_relations,
    subposet,
    verify_realizer,
)
from .errors import (
    ClaimViolation,
    CycleError,
    Disconnected,
    ExceedsMax,
    ExtensionMismatch,
    InvalidBlockRealizer,
    NotInBlock,
    NotReversible,
    PosetError,
    SharedElements,
    SolverTimeout,
    TooLarge,
    UnknownElement,
)
from .families import (
    gen_block_grid,
    gen_chain,
    gen_fig1_left,
    gen_fig1_right,
    gen_fig3_trees,
    gen_fig4_diamonds,
    gen_grid,
    gen_section5_antichains,
    gen_standard_example,
)
from .merge import (
    MergedFamily,
    ResidualPair,
    build_family,
    complete_realizer,
    dimension_upper_bound,
    merge_rule,
    residual_pairs,
)
from .reversal import find_alternating_cycle, is_reversible, reverse_extension
from .solver import (
    DimResult,
    brute_force_dimension,
    critical_pairs,
    exact_dimension,
    is_dim_at_most,
)

__version__ = "0.1.0"
