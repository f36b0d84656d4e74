from gaplab.thresholds.chernoff import (chernoff_lower,  # noqa: F401
                                        chernoff_two_sided, chernoff_upper)
from gaplab.thresholds.regime import (Regime, RegimeParams,  # noqa: F401
                                      classify_regime, normalized_ratio,
                                      regime_scale)
from gaplab.thresholds.scales import (BETA_C, beta_c, d_np,  # noqa: F401
                                      dense_step_gain, dense_target, e_np,
                                      heuristic_greedy_dense,
                                      heuristic_greedy_sparse, p_c,
                                      predicted_greedy_dense, s_np,
                                      sparse_step_gain, sparse_target)
