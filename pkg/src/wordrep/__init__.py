"""Word-representable graph toolkit: certified recognition, edge covers,
lexicographic constructions, and extremal subgraph bounds."""

from .certificates import (
    NON_COMPARABILITY,
    SEMI_TRANSITIVE,
    TRANSITIVE,
    WITNESS,
    WORD,
    Certificate,
    Decomposition,
    MuResult,
    Part,
)
from .decomposition import (
    as_decomposition,
    decompose_min_nonwr_product,
    decompose_power_k,
    decompose_power_two_comparability,
    decompose_product_general,
    decompose_product_tight,
    decompose_product_two,
    decomposition_diagnostics,
    decomposition_verify,
    verify_lower_bound,
)
from .errors import BudgetExceeded, InputError
from .extremal import (
    EtaResult,
    PowerBoundReport,
    eta,
    tau_exhaustive,
    verify_no_wr_subgraph,
    verify_power_bound,
)
from .formats import (
    decode_graph6,
    decode_sparse6,
    encode_graph6,
    parse_graph,
    to_dot,
)
from .graphs import (
    Graph,
    LexStructure,
    Orientation,
    complete_graph,
    cycle_graph,
    empty_graph,
    extremal8,
    induced_subgraph,
    path_graph,
    wheel_graph,
)
from .lexops import (
    LexMapGraph,
    LexPowerChain,
    LexProduct,
    ProductReport,
    SpecialSubgraph,
    lex_map,
    lex_power,
    lex_product,
    lift_semi_transitive,
    lift_transitive,
    orient_special,
    product_wr_characterize,
    special_subgraph,
)
from .recognition import (
    alternates,
    check_semi_transitive,
    check_transitive,
    comparability_decide,
    find_word,
    graph_of_word,
    is_minimal_non_wr,
    mu_exact,
    mu_verify,
    verify_certificate,
    verify_decomposition,
    word_represents,
    wr_decide,
    wr_with_dominating_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "Decomposition",
    "EtaResult",
    "Graph",
    "InputError",
    "LexMapGraph",
    "LexPowerChain",
    "LexProduct",
    "LexStructure",
    "MuResult",
    "NON_COMPARABILITY",
    "Orientation",
    "Part",
    "PowerBoundReport",
    "ProductReport",
    "SEMI_TRANSITIVE",
    "SpecialSubgraph",
    "TRANSITIVE",
    "WITNESS",
    "WORD",
    "alternates",
    "as_decomposition",
    "check_semi_transitive",
    "check_transitive",
    "comparability_decide",
    "complete_graph",
    "cycle_graph",
    "decode_graph6",
    "decode_sparse6",
    "decompose_min_nonwr_product",
    "decompose_power_k",
    "decompose_power_two_comparability",
    "decompose_product_general",
    "decompose_product_tight",
    "decompose_product_two",
    "decomposition_diagnostics",
    "decomposition_verify",
    "empty_graph",
    "encode_graph6",
    "eta",
    "extremal8",
    "find_word",
    "graph_of_word",
    "induced_subgraph",
    "is_minimal_non_wr",
    "lex_map",
    "lex_power",
    "lex_product",
    "lift_semi_transitive",
    "lift_transitive",
    "mu_exact",
    "mu_verify",
    "orient_special",
    "parse_graph",
    "path_graph",
    "product_wr_characterize",
    "special_subgraph",
    "tau_exhaustive",
    "to_dot",
    "verify_certificate",
    "verify_decomposition",
    "verify_lower_bound",
    "verify_no_wr_subgraph",
    "verify_power_bound",
    "wheel_graph",
    "word_represents",
    "wr_decide",
    "wr_with_dominating_vertex",
    "__version__",
]
