"""Cops and Robber on hypergraphs: exact solver, dismantling, constructions and
scripted strategies."""

from .construct import (
    ConstructionError,
    Kind,
    PartitionSpec,
    PrismSpec,
    basic,
    cartesian_product,
    complete_multipartite,
    hypertree_from_host,
    l_multipartite,
    prism,
    random_connected_hypergraph,
    random_hypertree,
    random_tree,
)
from .core import (
    Hypergraph,
    HypergraphError,
    closed_neighborhood,
    dot_delete,
    is_connected,
    is_corner,
    rank_antirank,
    two_section,
    weak_delete,
)
from .dismantle import DismantlingCertificate, dismantling_order, is_dismantlable, verify_certificate
from .io import ParseError, parse_hypergraph, serialise_hypergraph
from .solver import (
    IllegalMoveError,
    Side,
    StrategyError,
    Variant,
    WinTable,
    cop_number,
    evader_survives,
    extract_strategy,
    is_k_cop_win,
    play_match,
    solve,
)
from .suites import check_inequality_2, run_suite

__version__ = "0.1.0"
