"""Tamari interval-posets, the statistic-swapping bijection between lower
contacts and initial rise, and flows on ordered forests."""

from .polyalg import (
    NotDivisible,
    Poly,
    poly_add,
    poly_mul,
    poly_substitute_one,
    poly_div_x_minus_1,
    binomial,
    TRIVARIATE,
    UNIVARIATE,
)
from .catalan import (
    NoLeftChild,
    SizeMismatch,
    MalformedPath,
    BinaryTree,
    tree_size,
    render_tree,
    left_comb,
    right_comb,
    enumerate_trees,
    catalan,
    inorder_nodes,
    right_rotate,
    DyckPath,
    tree_from_dyck,
    dyck_from_tree,
    contacts,
    initial_rise_path,
    PlanarForest,
    render_forest,
    enumerate_forests,
    dec_forest_of_tree,
    inc_forest_of_tree,
    tree_from_dec_forest,
    tree_from_inc_forest,
    tamari_leq_bruteforce,
    Tree,
)
from .interval_poset import (
    IntervalPosetError,
    AxiomViolation,
    Cycle,
    DuplicateParent,
    NotAnInterval,
    IntervalPoset,
    IntervalStats,
    validate,
    from_tree_pair,
    lower_tree,
    upper_tree,
    stat_trees,
    stat_ir,
    stats,
    tamari_leq,
    restrict,
    cut_block,
)
from .decomposition import (
    ROutOfRange,
    EmptyPoset,
    LCTriple,
    IRTriple,
    lc_compose,
    lc_decompose,
    ir_insert,
    ir_remove,
    ir_compose,
    ir_decompose,
    beta,
    beta_inverse,
)
from .flows import (
    FlowError,
    InputBelowMinusOne,
    NegativeRate,
    NotClosed,
    NoSource,
    Flow,
    FlowStats,
    validate_flow,
    exit_rate,
    enumerate_flows_with_exit,
    enumerate_closed_flows,
    forest_to_upper_tree,
    flow_to_interval_poset,
    interval_poset_to_flow,
    flow_stats,
    rate_sets,
    PosetFlowStats,
    poset_flow_stats,
    flow_series,
    series_coefficient,
)
from .formats import (
    ParseError,
    ValidationError,
    parse_tree,
    parse_tree_pair,
    parse_dyck,
    parse_poset,
    parse_forest,
    parse_flow,
    parse_object,
    render_poset,
    render_flow,
    render_object,
    render_dot,
    KINDS,
)
from .verify import (
    NonIntegerResult,
    SizeReport,
    enumerate_interval_posets,
    count_formula,
    size_report,
    phi,
    check_symmetry,
    check_functional_equations,
    InvolutionReport,
    check_beta_involution,
    BetaReport,
    check_beta_contract,
    FlowTheoremRow,
    flow_theorem_rows,
    check_flow_theorem,
    check_open_flow_series,
)

__version__ = "0.1.0"

__all__ = [
    "NotDivisible",
    "Poly",
    "poly_add",
    "poly_mul",
    "poly_substitute_one",
    "poly_div_x_minus_1",
    "binomial",
    "TRIVARIATE",
    "UNIVARIATE",
    "NoLeftChild",
    "SizeMismatch",
    "MalformedPath",
    "BinaryTree",
    "tree_size",
    "render_tree",
    "left_comb",
    "right_comb",
    "enumerate_trees",
    "catalan",
    "inorder_nodes",
    "right_rotate",
    "DyckPath",
    "tree_from_dyck",
    "dyck_from_tree",
    "contacts",
    "initial_rise_path",
    "PlanarForest",
    "render_forest",
    "enumerate_forests",
    "dec_forest_of_tree",
    "inc_forest_of_tree",
    "tree_from_dec_forest",
    "tree_from_inc_forest",
    "tamari_leq_bruteforce",
    "Tree",
    "IntervalPosetError",
    "AxiomViolation",
    "Cycle",
    "DuplicateParent",
    "NotAnInterval",
    "IntervalPoset",
    "IntervalStats",
    "validate",
    "from_tree_pair",
    "lower_tree",
    "upper_tree",
    "stat_trees",
    "stat_ir",
    "stats",
    "tamari_leq",
    "restrict",
    "cut_block",
    "ROutOfRange",
    "EmptyPoset",
    "LCTriple",
    "IRTriple",
    "lc_compose",
    "lc_decompose",
    "ir_insert",
    "ir_remove",
    "ir_compose",
    "ir_decompose",
    "beta",
    "beta_inverse",
    "FlowError",
    "InputBelowMinusOne",
    "NegativeRate",
    "NotClosed",
    "NoSource",
    "Flow",
    "FlowStats",
    "validate_flow",
    "exit_rate",
    "enumerate_flows_with_exit",
    "enumerate_closed_flows",
    "forest_to_upper_tree",
    "flow_to_interval_poset",
    "interval_poset_to_flow",
    "flow_stats",
    "rate_sets",
    "PosetFlowStats",
    "poset_flow_stats",
    "flow_series",
    "series_coefficient",
    "ParseError",
    "ValidationError",
    "parse_tree",
    "parse_tree_pair",
    "parse_dyck",
    "parse_poset",
    "parse_forest",
    "parse_flow",
    "parse_object",
    "render_poset",
    "render_flow",
    "render_object",
    "render_dot",
    "KINDS",
    "NonIntegerResult",
    "SizeReport",
    "enumerate_interval_posets",
    "count_formula",
    "size_report",
    "phi",
    "check_symmetry",
    "check_functional_equations",
    "InvolutionReport",
    "check_beta_involution",
    "BetaReport",
    "check_beta_contract",
    "FlowTheoremRow",
    "flow_theorem_rows",
    "check_flow_theorem",
    "check_open_flow_series",
]
