from gaplab.correlated.coupled import coupled_greedy_runs  # noqa: F401
from gaplab.correlated.labeling import (EdgeLabeling, edge_index,  # noqa: F401
                                        edge_pair, prefix_span,
                                        shared_label_count)
from gaplab.correlated.pairs import (interpolation_path,  # noqa: F401
                                     sample_2alpha)
from gaplab.correlated.schedule import (AlphaSchedule,  # noqa: F401
                                        choose_schedule, riemann_sum)
from gaplab.correlated.tree_family import (CorrelatedFamily,  # noqa: F401
                                           is_prefix_consistent,
                                           sample_tree_family)
