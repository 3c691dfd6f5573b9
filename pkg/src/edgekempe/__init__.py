"""Edge-Kempe equivalence of 3-edge-colourings of cubic graphs.

Compute K'(G, n), the number of edge-Kempe classes of proper n-edge-
colourings, and work with the Y (3-edge cut) and H (2-edge cut)
composition of cubic graphs and their colourings.
"""

from .classes import (
    ClassReport,
    KempeSpace,
    SwitchSequence,
    are_equivalent,
    count_classes,
    export_kempe_graph,
    k_prime,
    normalize_switch_sequence,
    permute_colors_via_switches,
)
from .coloring import (
    EdgeColoring,
    KempeChain,
    Switch,
    all_chains,
    apply_switch,
    cut_color_check,
    enumerate_colorings,
    kempe_chain,
)
from .compose import (
    DecompositionTree,
    HPlan,
    YPlan,
    color_compose,
    color_split,
    decompose_to_3connected,
    h_compose,
    h_split,
    verify_multiplicativity,
    y_compose,
    y_split,
)
from .families import (
    FamilySpec,
    census,
    crossed_prism,
    generate,
    k4,
    k33,
    kprime_spectrum,
    moebius_ladder,
    prism,
    search_one_class,
    theta,
)
from .graph import (
    EdgeCut,
    MultiGraph,
    canonical_form,
    find_edge_cuts,
    is_bipartite,
    is_planar,
    parse_graph,
    validate_cubic,
)

__version__ = "0.1.0"
