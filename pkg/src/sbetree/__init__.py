"""Split-by-edges trees for maximum independent sets, independent-set enumeration and colouring."""

from .closed_forms import (
    WidthProfile,
    count_sbe_trees_complete,
    moebius_split_prediction,
    path_width_profile,
    random_split_prediction,
    sbe_size_complete,
    usbe_size_complete,
)
from .coloring import Coloring, add_up_sets, all_colorings, chromatic_number, find_coloring_for_spec
from .engine import (
    BudgetExceeded,
    Layer,
    SbeTree,
    build_sbe_tree,
    build_usbe_layers,
    expand_layer,
    reconstruct_parents,
    split,
    splitting_edge,
)
from .enumerate import IndependentFamily, close_downward, foliage
from .graph import (
    Graph,
    GraphFormatError,
    VertexMapping,
    format_subset,
    from_labels,
    generate,
    is_independent,
    parse_graph,
    reorder_by_degree,
    to_labels,
    write_graph,
)
from .mis import SearchStats, find_mis, find_mis_with_ordering

__version__ = "0.1.0"
