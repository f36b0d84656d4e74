from gaplab.admissibility.checks import (CheckMode, EdgeClause,  # noqa: F401
                                         OLClause, SubgraphClause,
                                         check_edge_count,
                                         check_induced_subgraphs,
                                         check_ol_concentration,
                                         edge_count_bound, ol_bound,
                                         subgraph_bound)
from gaplab.admissibility.report import (AdmissibilityReport,  # noqa: F401
                                         is_admissible)
