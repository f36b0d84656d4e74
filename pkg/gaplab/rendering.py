"""
Text exports rendered from the jinja2 templates shipped in ``templates/``.
"""
from pathlib import Path
from typing import Mapping

import jinja2

from gaplab.correlated.tree_family import CorrelatedFamily, Path as NodePath
from gaplab.graph_core.permutation import Permutation

TEMPLATE_DIR = Path(__file__).parent / "templates"


def _environment() -> jinja2.Environment:
    return jinja2.Environment(
        loader=jinja2.FileSystemLoader(TEMPLATE_DIR),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=jinja2.StrictUndefined,
    )


def format_path(path: NodePath) -> str:
    return "root" if not path else ".".join(str(c) for c in path)


def render_manifest(family: CorrelatedFamily) -> str:
    """Node path -> column block, label block and seed label, one line per node."""
    template = _environment().get_template("family_manifest.txt.j2")
    return template.render(
        family=family,
        schedule=family.schedule,
        entries=[(format_path(entry.path), entry) for entry in family.manifest()],
    )


def render_witness(witness: Mapping[NodePath, Permutation]) -> str:
    """Leaf path -> permutation in one-line word and cycle notation."""
    template = _environment().get_template("witness.txt.j2")
    rows = [
        (format_path(leaf), " ".join(str(x) for x in pi.one_line()), pi.cycle_notation())
        for leaf, pi in sorted(witness.items())
    ]
    return template.render(rows=rows)
