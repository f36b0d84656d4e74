from gaplab.graph_core.graph import (Graph, edge_distance,  # noqa: F401
                                     expected_pair_density, pair_count)
from gaplab.graph_core.io import (format_edge_list, parse_edge_list,  # noqa: F401
                                  read_edge_list, write_edge_list)
from gaplab.graph_core.overlap import (centered_overlap, expected_ol,  # noqa: F401
                                       ol_count, ol_set, overlap)
from gaplab.graph_core.permutation import (Permutation, compose,  # noqa: F401
                                           fixed_points, inverse,
                                           permutation_distance,
                                           permutation_overlap, transpositions)
from gaplab.graph_core.sampling import sample_er  # noqa: F401
from gaplab.graph_core.seed import Seed  # noqa: F401
