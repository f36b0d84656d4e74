"""
Combined admissibility verdict.
"""
import json
import logging
from dataclasses import dataclass

from apischema import serialize, serialized

from gaplab.admissibility.checks import (CheckMode, EdgeClause, OLClause,
                                         SubgraphClause, check_edge_count,
                                         check_induced_subgraphs,
                                         check_ol_concentration)
from gaplab.graph_core.graph import Graph
from gaplab.graph_core.seed import Seed

logger = logging.getLogger(__name__)


@dataclass
class AdmissibilityReport:
    n: int
    p: float
    edge_clause: EdgeClause
    subgraph_clause: SubgraphClause
    ol_clause: OLClause

    @serialized
    @property
    def overall(self) -> bool:
        return (self.edge_clause.passed
                and self.subgraph_clause.passed
                and self.ol_clause.passed)

    def to_json(self, indent=None) -> str:
        """One object per clause, keys sorted so equal reports give equal text."""
        return json.dumps(serialize(AdmissibilityReport, self), indent=indent, sort_keys=True)


def is_admissible(g: Graph, p: float, mode: CheckMode = CheckMode.MonteCarlo,
                  subset_samples: int = 10_000, permutation_samples: int = 1_000,
                  seed: Seed = Seed(0)) -> AdmissibilityReport:
    """
    Check all three clauses.

    Parameters
    ----------
    g : Graph
    p : float
        Reference edge probability, in (0, 1).
    mode : CheckMode
        ``Exact`` enumerates subsets and permutations; it needs n <= 8.
    subset_samples, permutation_samples : int
        Monte Carlo sample sizes, ignored in exact mode.
    seed : Seed
        Root of the ``subsets`` and ``permutations`` sampling streams.
    """
    report = AdmissibilityReport(
        n=g.n,
        p=p,
        edge_clause=check_edge_count(g, p),
        subgraph_clause=check_induced_subgraphs(g, p, mode, subset_samples, seed.child("subsets")),
        ol_clause=check_ol_concentration(g, p, mode, permutation_samples,
                                         seed.child("permutations")),
    )
    logger.debug(f"Admissibility n={g.n} p={p}: edge={report.edge_clause.passed} "
                 f"subgraph={report.subgraph_clause.passed} ol={report.ol_clause.passed}")
    return report
