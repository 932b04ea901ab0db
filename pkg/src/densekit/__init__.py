"""Dense subgraph discovery under size constraints.

Greedy peeling with cores, exact densest subgraph via parametric max-flow,
a 2-approximation for the at-least-k problem, and an exactly-k
approximation driven by pluggable at-most-k oracles, all checkable against
brute-force enumeration on small graphs.
"""

from .bruteforce import (
    ExactAnswer,
    brute_force,
    corpus,
    exact_size_profile,
    labeled_graphs,
    random_gnm,
    random_graphs,
)
from .errors import (
    CapacityError,
    DenseKitError,
    MalformedInputError,
    OracleContractError,
    ParameterError,
)
from .flow import (
    FlowNetwork,
    FlowResult,
    NestedFamily,
    best_excess_set,
    excess_network,
    max_flow_min_cut,
    parametric_family,
    solve_max_flow,
)
from .graph import (
    DensityReport,
    WeightedGraph,
    density,
    induced_weight,
    parse_graph,
    serialize_graph,
)
from .peeling import (
    CoreResult,
    PeelingTrace,
    chalk,
    charikar_densest,
    peel,
    w_core,
)
from .results import SubgraphResult, make_result
from .solvers import (
    DamksOracle,
    ReductionRound,
    ReductionTrace,
    bruteforce_oracle,
    dalks_2approx,
    damks_bruteforce_oracle,
    damks_peel_heuristic,
    dks_via_damks,
    exact_densest,
    greedy_shrink,
    pad_to_size,
    peel_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CoreResult",
    "DamksOracle",
    "DenseKitError",
    "DensityReport",
    "ExactAnswer",
    "FlowNetwork",
    "FlowResult",
    "MalformedInputError",
    "NestedFamily",
    "OracleContractError",
    "ParameterError",
    "PeelingTrace",
    "ReductionRound",
    "ReductionTrace",
    "SubgraphResult",
    "WeightedGraph",
    "best_excess_set",
    "brute_force",
    "bruteforce_oracle",
    "chalk",
    "charikar_densest",
    "corpus",
    "dalks_2approx",
    "damks_bruteforce_oracle",
    "damks_peel_heuristic",
    "density",
    "dks_via_damks",
    "exact_densest",
    "exact_size_profile",
    "excess_network",
    "greedy_shrink",
    "induced_weight",
    "labeled_graphs",
    "make_result",
    "max_flow_min_cut",
    "pad_to_size",
    "parametric_family",
    "parse_graph",
    "peel",
    "peel_oracle",
    "random_gnm",
    "random_graphs",
    "serialize_graph",
    "solve_max_flow",
    "w_core",
]
