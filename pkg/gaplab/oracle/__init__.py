from gaplab.oracle.branching import (detect_forbidden_branching,  # noqa: F401
                                     is_forbidden_structure)
from gaplab.oracle.brute import BruteResult, brute_max_overlap  # noqa: F401
from gaplab.oracle.ogp import (ForbiddenBandConfig,  # noqa: F401
                               InterpolationReport, detect_forbidden_2ogp,
                               interpolation_ogp_scan)
from gaplab.oracle.solution_set import (SolutionSet,  # noqa: F401
                                        SolutionThreshold,
                                        enumerate_solution_set)
