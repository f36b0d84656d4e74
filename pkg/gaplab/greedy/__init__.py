from gaplab.greedy.align import (AlignmentResult, greedy_align,  # noqa: F401
                                 greedy_align_perturbed, run_greedy)
from gaplab.greedy.config import GreedyConfig, TieBreak  # noqa: F401
from gaplab.greedy.online import online_prefix_check  # noqa: F401
from gaplab.greedy.trajectory import (TrajectoryRecord,  # noqa: F401
                                      dense_good_event, step_events,
                                      trajectory, write_trajectory_csv)
