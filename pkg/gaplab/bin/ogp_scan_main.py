import json
import logging
from typing import Optional

from apischema import serialize

from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.correlated.pairs import sample_2alpha
from gaplab.graph_core.sampling import sample_er
from gaplab.greedy.align import greedy_align
from gaplab.greedy.config import GreedyConfig
from gaplab.oracle.ogp import (ForbiddenBandConfig, InterpolationReport,
                               detect_forbidden_2ogp, interpolation_ogp_scan)
from gaplab.rendering import render_witness
from gaplab.thresholds.regime import Regime

logger = logging.getLogger(__name__)


def main(n: int, p: Optional[float], p_rule: str, seed: Optional[int], beta0: float,
         band_eta: float, eta: float, regime: str, cap: int, alpha: Optional[float],
         out: Optional[str]) -> int:
    prob = resolve_p(n, p, p_rule)
    root = resolve_seed(seed)
    band = ForbiddenBandConfig(beta0=beta0, eta=band_eta)
    gs = sample_er(n, prob, root.child("Gs"))

    if alpha is not None:
        g1, g2 = sample_2alpha(n, prob, alpha, root.child("pair"))
        pair = detect_forbidden_2ogp(g1, g2, gs, band, Regime(regime), cap=cap, p=prob)
        with output_stream(out) as fd:
            if pair is None:
                fd.write("# no forbidden pair\n")
            else:
                fd.write("# forbidden pair\n" + render_witness({(0,): pair[0], (1,): pair[1]}))
        return 0

    g = sample_er(n, prob, root.child("G"))
    g_prime = sample_er(n, prob, root.child("G'"))
    cfg = GreedyConfig(eta=eta, seed=root.child("align"), p=prob)
    report = interpolation_ogp_scan(
        g, g_prime, gs, band, greedy_align, cfg, regime=Regime(regime), cap=cap, p=prob,
    )
    with output_stream(out) as fd:
        fd.write(json.dumps(serialize(InterpolationReport, report), sort_keys=True) + "\n")
    logger.info(f"ogp={report.ogp_holds} suc={report.suc_holds} "
                f"stable={report.stable_holds} ends={report.ends_holds}")
    return 0
