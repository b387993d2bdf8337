"""b-chromatic numbers of star products and their operator graphs.

Immutable simple graphs, the four operators (Cartesian product, line
graph, total graph, power), constructive b-colorings, closed-form
phi/m-degree tables, and an exact solver that arbitrates all of them.
"""

from bchroma.graph import (
    Graph,
    Plain,
    Pair,
    EdgeOrigin,
    star,
    complete,
    path,
    cycle,
    degree_profile,
    distance,
    diameter,
)
from bchroma.operators import cartesian_product, line_graph, total_graph, graph_power
from bchroma.coloring import (
    Coloring,
    BColoringCertificate,
    is_proper,
    is_b_vertex,
    validate_certificate,
    used_colors,
)
from bchroma.solver import (
    SolverBudget,
    BudgetExceeded,
    m_degree,
    clique_number,
    chromatic_number,
    has_b_coloring,
    b_chromatic_number,
    count_b_colorings,
)

__version__ = "0.1.0"
