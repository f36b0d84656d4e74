import csv
import io
import json
import logging
from pathlib import Path
from typing import List, Tuple

import pytest

from gaplab import logging as gaplab_logging
from gaplab.bin.main import main
from gaplab.exceptions import ConfigurationError
from gaplab.graph_core.io import read_edge_list, write_edge_list
from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.trajectory import TRAJECTORY_COLUMNS
from gaplab.harness.records import SUMMARY_COLUMNS

from .conftest import arg_variants, cli_args, er_pair, restore_logging

logger = logging.getLogger(__name__)

SUBCOMMANDS = [
    "", "generate", "align", "oracle", "admissible", "correlate", "ogp-scan",
    "experiment", "trajectory",
]


def run_cli(args: List[str]) -> int:
    with cli_args(["gaplab"] + args), restore_logging():
        return main()


@pytest.mark.parametrize("subcommand", SUBCOMMANDS)
def test_main_normal(subcommand: str):
    args = ["gaplab", "--help"]
    if subcommand:
        args.insert(1, subcommand)
    with pytest.raises(SystemExit), cli_args(args), restore_logging():
        main()


def test_main_noargs():
    with cli_args(["gaplab"]), restore_logging():
        main()


def test_unknown_flag():
    with pytest.raises(SystemExit) as exc:
        run_cli(["align", "--n", "10", "--p", "0.5", "--bogus"])
    assert exc.value.code == 2


def test_generate(capsys: pytest.CaptureFixture):
    assert run_cli(["generate", "--n", "30", "--p", "0.2", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    expected = sample_er(30, 0.2, Seed(4).child("G"))
    header = out.splitlines()[0]
    assert header == f"30 {expected.edge_count}"


def test_generate_to_file(tmp_path: Path):
    target = tmp_path / "g.txt"
    assert run_cli(["generate", "--n", "25", "--p", "0.3", "--seed", "2", "--stream", "Gs",
                    "--out", str(target)]) == 0
    assert read_edge_list(target) == sample_er(25, 0.3, Seed(2).child("Gs"))


def test_generate_bad_probability(caplog):
    assert run_cli(["generate", "--n", "30", "--p", "1.5"]) == 1
    assert "ConfigurationError" in caplog.text


def test_missing_probability():
    assert run_cli(["generate", "--n", "30"]) == 1


ALIGN_ARGS = (
    (("--tie-break", "uniform"), ("--tie-break", "perturbation")),
    (("--greedy-tail",), ()),
    (("--eta", "0.1"), ()),
)


@pytest.mark.parametrize("added_args", tuple(arg_variants(ALIGN_ARGS)))
def test_align(added_args: Tuple[str, ...], capsys: pytest.CaptureFixture):
    args = ["align", "--n", "60", "--p", "0.3", "--seed", "7"]
    args.extend(added_args)
    assert run_cli(args) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["n"] == 60
    assert record["p"] == 0.3
    assert record["seed"] == 7
    assert record["runtime_ms"] is None
    assert record["algorithm"].startswith("greedy")


def test_align_reproducible(capsys: pytest.CaptureFixture):
    outputs = []
    for _ in range(2):
        assert run_cli(["align", "--n", "80", "--p", "2", "--p-rule", "pc-multiple",
                        "--seed", "3"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_align_seed_from_env(capsys: pytest.CaptureFixture, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("GAPLAB_SEED", "5")
    assert run_cli(["align", "--n", "40", "--p", "0.3"]) == 0
    env_out = capsys.readouterr().out
    assert run_cli(["align", "--n", "40", "--p", "0.3", "--seed", "5"]) == 0
    assert capsys.readouterr().out == env_out


def test_align_files(tmp_path: Path, capsys: pytest.CaptureFixture):
    g, gs = er_pair(20, 0.4, root=1)
    write_edge_list(g, tmp_path / "g.txt")
    write_edge_list(gs, tmp_path / "gs.txt")
    trajectory = tmp_path / "trajectory.csv"
    assert run_cli(["align", "--g", str(tmp_path / "g.txt"), "--gs", str(tmp_path / "gs.txt"),
                    "--trajectory", str(trajectory), "--timing"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["n"] == 20
    assert record["runtime_ms"] is not None
    rows = trajectory.read_text().splitlines()
    assert rows[0] == ",".join(TRAJECTORY_COLUMNS)
    assert len(rows) == 21


def test_align_size_mismatch(tmp_path: Path):
    write_edge_list(sample_er(10, 0.5, Seed(0)), tmp_path / "g.txt")
    write_edge_list(sample_er(12, 0.5, Seed(0)), tmp_path / "gs.txt")
    assert run_cli(["align", "--g", str(tmp_path / "g.txt"),
                    "--gs", str(tmp_path / "gs.txt")]) == 1


def test_align_half_pair(tmp_path: Path):
    write_edge_list(sample_er(10, 0.5, Seed(0)), tmp_path / "g.txt")
    assert run_cli(["align", "--g", str(tmp_path / "g.txt")]) == 1


def test_oracle(capsys: pytest.CaptureFixture):
    assert run_cli(["oracle", "--n", "6", "--p", "0.5", "--seed", "1"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["dominated"]
    assert summary["greedy"] <= summary["brute"]
    assert sorted(summary["argmax"]) == list(range(1, 7))


def test_oracle_cap():
    assert run_cli(["oracle", "--n", "8", "--p", "0.5", "--cap", "7"]) == 1


def test_admissible(capsys: pytest.CaptureFixture):
    assert run_cli(["admissible", "--n", "100", "--p", "3", "--p-rule", "pc-multiple",
                    "--subset-samples", "200", "--permutation-samples", "20"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 100
    assert report["subgraph_clause"]["mode"] == "monte-carlo"


def test_admissible_graph_file(tmp_path: Path, capsys: pytest.CaptureFixture):
    write_edge_list(sample_er(7, 0.5, Seed(2)), tmp_path / "g.txt")
    assert run_cli(["admissible", "--graph", str(tmp_path / "g.txt"), "--p", "0.5",
                    "--mode", "exact"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ol_clause"]["samples"] == 5040


def test_admissible_bad_probability():
    assert run_cli(["admissible", "--n", "10", "--p", "1.0"]) == 1


def test_correlate_manifest(tmp_path: Path, capsys: pytest.CaptureFixture):
    out_dir = tmp_path / "leaves"
    assert run_cli(["correlate", "--n", "6", "--p", "0.5", "--seed", "2", "--branching", "2",
                    "--depth", "2", "--out-dir", str(out_dir), "--align"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# tree-correlated family")
    assert "# coupled greedy outputs" in out
    assert sorted(path.name for path in out_dir.iterdir()) == [
        "leaf_0.0.txt", "leaf_0.1.txt", "leaf_1.0.txt", "leaf_1.1.txt",
    ]
    assert read_edge_list(out_dir / "leaf_0.0.txt").n == 6


def test_correlate_detect(capsys: pytest.CaptureFixture):
    assert run_cli(["correlate", "--n", "5", "--p", "0.5", "--seed", "1", "--branching", "2",
                    "--depth", "2", "--detect-beta", "-100"]) == 0
    assert "# forbidden structure" in capsys.readouterr().out


def test_correlate_pair(tmp_path: Path):
    assert run_cli(["correlate", "--n", "20", "--p", "0.3", "--alpha", "0.5",
                    "--out-dir", str(tmp_path)]) == 0
    first = read_edge_list(tmp_path / "first.txt")
    second = read_edge_list(tmp_path / "second.txt")
    assert first.n == second.n == 20


def test_correlate_pair_needs_directory():
    assert run_cli(["correlate", "--n", "20", "--p", "0.3", "--alpha", "0.5"]) == 1


def test_ogp_scan(capsys: pytest.CaptureFixture):
    assert run_cli(["ogp-scan", "--n", "6", "--p", "0.5", "--seed", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 6
    assert report["path_length"] == 15
    assert len(report["distances"]) == 15


def test_ogp_scan_pair(capsys: pytest.CaptureFixture):
    assert run_cli(["ogp-scan", "--n", "5", "--p", "0.5", "--alpha", "0.5"]) == 0
    assert capsys.readouterr().out.startswith("# ")


def test_ogp_scan_bad_band():
    assert run_cli(["ogp-scan", "--n", "6", "--p", "0.5", "--beta0", "0.5"]) == 1


def test_experiment_stdout(capsys: pytest.CaptureFixture):
    assert run_cli(["experiment", "--n", "40", "60", "--p", "0.4", "--reps", "2",
                    "--seed", "1"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert tuple(rows[0]) == SUMMARY_COLUMNS
    assert len(rows) == 3


def test_experiment_jsonl(capsys: pytest.CaptureFixture):
    assert run_cli(["experiment", "--n", "40", "--p", "0.4", "--reps", "3",
                    "--format", "jsonl"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(line)["replicate"] for line in lines] == [0, 1, 2]


def test_experiment_config_round_trip(tmp_path: Path):
    config = tmp_path / "config.json"
    first = tmp_path / "first.jsonl"
    second = tmp_path / "second.jsonl"
    assert run_cli(["experiment", "--id", "cli", "--n", "50", "--p", "0.5", "--p-rule", "power",
                    "--reps", "2", "--seed", "9", "--out", str(first),
                    "--save-config", str(config)]) == 0
    assert json.loads(config.read_text())["experiment_id"] == "cli"
    assert run_cli(["experiment", "--config", str(config), "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_experiment_flat_config(tmp_path: Path, capsys: pytest.CaptureFixture):
    config = tmp_path / "flat.json"
    config.write_text(json.dumps({"n": [40, 60], "p": 0.4, "reps": 2, "seed": 1}))
    assert run_cli(["experiment", "--config", str(config)]) == 0
    from_file = capsys.readouterr().out
    assert run_cli(["experiment", "--n", "40", "60", "--p", "0.4", "--reps", "2",
                    "--seed", "1"]) == 0
    assert capsys.readouterr().out == from_file


def test_experiment_errors(tmp_path: Path):
    assert run_cli(["experiment"]) == 1
    assert run_cli(["experiment", "--n", "40"]) == 1
    assert run_cli(["experiment", "--config", str(tmp_path / "missing.json")]) == 1


def test_trajectory(tmp_path: Path, capsys: pytest.CaptureFixture):
    events = tmp_path / "events.json"
    assert run_cli(["trajectory", "--n", "100", "--p", "0.5", "--seed", "2",
                    "--good-event", "--events", str(events)]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == ",".join(TRAJECTORY_COLUMNS)
    assert len(rows) == 101
    summary = json.loads(events.read_text())
    assert summary["regime"] == "dense"
    assert summary["good_event"] is not None


def test_log_file_path(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(gaplab_logging, "LOG_DIR", None)
    with pytest.raises(ConfigurationError):
        gaplab_logging.log_file_path()
    gaplab_logging.configure_log_directory(tmp_path)
    path = gaplab_logging.log_file_path()
    assert path.exists()
    assert path.parent.parent == tmp_path.resolve()
    assert path.suffix == ".log"
