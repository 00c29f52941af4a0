"""Exact two-variable stable polynomials built from undirected colored graphs.

The package constructs, for a graph with a distinguished first and last
vertex and a rational color weight t on the last vertex, an exact rational
inner function q/p on the bidisk; decides from graph structure whether p has
boundary zeros; computes the contact order of those zeros exactly; and sweeps
families of small graphs to check the expected contact orders.
"""

__version__ = "0.1.0"

from .errors import StabgraphError
from .exactalg import NEG_INF, GaussianRational, UniPoly, gcd
from .polylin import BiLinPoly, PolyMatrix, RationalFunction2, rf_reduce
from .graphcore import (
    ColoredGraph,
    Connectivity,
    canonical_id,
    enumerate_graphs,
    is_connected_1n,
    mod_append_tail,
    mod_attach,
    mod_prepend_head,
    parse_edge_list,
    parse_graph6,
    path_graph,
    shortest_path_len,
    to_graph6,
)
from .construct import StablePair, f_of_graph, rif_of_graph, scalar_equiv
from .boundary import (
    BoundaryPoint,
    circle_scan,
    guaranteed_zero_check,
    stability_scan,
    t_transfer,
    t_transfer_inverse,
)
from .contact import (
    ContactReport,
    contact_of_fraction,
    contact_order,
    level_set_oracle,
    path_det,
    path_det_closed,
    path_det_reversed,
    path_det_reversed_closed,
    sub_binomial,
)
from .harness import (
    ConjectureRow,
    ModificationSummary,
    load_report,
    render_report,
    verify_conjecture,
    verify_modifications,
    write_report,
)

__all__ = [
    "__version__",
    "StabgraphError",
    "GaussianRational",
    "UniPoly",
    "NEG_INF",
    "gcd",
    "BiLinPoly",
    "PolyMatrix",
    "RationalFunction2",
    "rf_reduce",
    "ColoredGraph",
    "Connectivity",
    "canonical_id",
    "enumerate_graphs",
    "is_connected_1n",
    "mod_append_tail",
    "mod_attach",
    "mod_prepend_head",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "shortest_path_len",
    "to_graph6",
    "StablePair",
    "f_of_graph",
    "rif_of_graph",
    "scalar_equiv",
    "BoundaryPoint",
    "circle_scan",
    "guaranteed_zero_check",
    "stability_scan",
    "t_transfer",
    "t_transfer_inverse",
    "ContactReport",
    "contact_of_fraction",
    "contact_order",
    "level_set_oracle",
    "path_det",
    "path_det_closed",
    "path_det_reversed",
    "path_det_reversed_closed",
    "sub_binomial",
    "ConjectureRow",
    "ModificationSummary",
    "load_report",
    "render_report",
    "verify_conjecture",
    "verify_modifications",
    "write_report",
]
