import dataclasses
import json
import logging
from typing import Optional

from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.harness.trajectory import run_trajectory

logger = logging.getLogger(__name__)


def main(n: int, p: Optional[float], p_rule: str, seed: Optional[int], eta: float, slack: float,
         good_event: bool, events: Optional[str], out: Optional[str]) -> int:
    prob = resolve_p(n, p, p_rule)
    root = resolve_seed(seed)
    with output_stream(out) as fd:
        report = run_trajectory(n, prob, eta, root, slack=slack, good_event=good_event,
                                csv_target=fd)
    if events is not None:
        summary = {
            "n": n,
            "p": prob,
            "eta": eta,
            "seed": root.root,
            "regime": report.regime.value,
            "overlap": report.result.overlap_value,
            "events": dataclasses.asdict(report.events),
            "good_event": (dataclasses.asdict(report.good_event)
                           if report.good_event is not None else None),
        }
        with open(events, "w") as fd:
            json.dump(summary, fd, indent=2, sort_keys=True)
            fd.write("\n")
        logger.info(f"Wrote event summary to {events}")
    return 0
