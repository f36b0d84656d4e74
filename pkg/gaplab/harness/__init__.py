from gaplab.harness.config import (AbsoluteP, ExperimentConfig,  # noqa: F401
                                   GridPoint, PcMultiple, PowerOfN, PRule,
                                   load_config, resolve_grid, save_config)
from gaplab.harness.convergence import (ConvergenceResult,  # noqa: F401
                                        run_convergence)
from gaplab.harness.records import (RunRecord, SummaryRow,  # noqa: F401
                                    summarize, write_records_jsonl,
                                    write_summary_csv)
from gaplab.harness.trajectory import (TrajectoryReport,  # noqa: F401
                                       run_trajectory)
