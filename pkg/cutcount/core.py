# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
import os
from typing import Dict, Optional

from .errors import BudgetExceededError, IntegrityError
from .five import count_five
from .four import FourAux, count_four
from .graph import Graph, build_degree_ordered_dag, read_edge_list
from .oracle import DEFAULT_ORACLE_BUDGET, brute_force_induced
from .patterns.disconnected import disconnected_counts
from .report import CountReport, emit_trends
from .triads import count_wedges, enumerate_triangles, three_report
from .utils import __version__, stage_timer

logger = logging.getLogger("cutcount")


def setup_logging(level=None):
    level = level or os.environ["CUTCOUNT_LOGGING_LEVEL"]
    handle = logging.StreamHandler()
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s " "- %(message)s"
    )
    handle.setFormatter(formatter)
    logger.addHandler(handle)
    logger.setLevel(level)


# To see the stage timings as they happen, set CUTCOUNT_LOGGING_LEVEL=DEBUG.
if "CUTCOUNT_LOGGING_LEVEL" in os.environ:
    setup_logging()

PROFILE_KINDS = ("vertex", "edge")


def _setting(value, variable, default):
    if value is not None:
        return int(value)
    if os.environ.get(variable):
        return int(os.environ[variable])
    return default


class SubgraphCounter:
    """Count every pattern on 3, 4 or 5 vertices in a graph.

    The pipeline orients the graph by degree, enumerates its triangles, runs
    the 4-vertex counters and, for size 5, the 5-vertex cut formulas, then
    converts the non-induced counts to induced ones and derives the
    disconnected patterns.

    Parameters
    ----------
    memory_budget : int (None)
        Bytes the triangle lists may take. Above it the lists are not built
        and only sizes 3 and 4 can be counted. Falls back to
        ``CUTCOUNT_MEMORY_BUDGET``, then to 2 GiB.
    oracle_budget : int (None)
        Largest number of vertex subsets the brute-force check may enumerate.
        Falls back to ``CUTCOUNT_ORACLE_BUDGET``, then to 5 million.
    workers : int (None)
        Processes for the 5-vertex enumeration loops and the oracle. Falls
        back to ``CUTCOUNT_WORKERS``, then to 1.
    storage_options : dict
        Passed to ``fsspec.open`` when reading edge lists and writing reports,
        for instance the ``config`` of an ``oci://`` location.
    """

    default_memory_budget = 2 * 2**30
    default_oracle_budget = DEFAULT_ORACLE_BUDGET
    default_workers = 1

    def __init__(
        self,
        memory_budget: int = None,
        oracle_budget: int = None,
        workers: int = None,
        storage_options: dict = None,
    ):
        self.memory_budget = _setting(memory_budget, "CUTCOUNT_MEMORY_BUDGET", self.default_memory_budget)
        self.oracle_budget = _setting(oracle_budget, "CUTCOUNT_ORACLE_BUDGET", self.default_oracle_budget)
        self.workers = max(1, _setting(workers, "CUTCOUNT_WORKERS", self.default_workers))
        self.storage_options = storage_options or dict()

    def load(self, urlpath: str, num_vertices: Optional[int] = None, header: bool = False) -> Graph:
        return read_edge_list(
            urlpath,
            storage_options=self.storage_options,
            num_vertices=num_vertices,
            header=header,
        )

    def count(
        self,
        g: Graph,
        size: int = 5,
        profiles: Optional[str] = None,
        oracle_check: bool = False,
        trends: bool = False,
        timings: bool = False,
    ) -> CountReport:
        """Run the pipeline on ``g`` and collect a :class:`CountReport`.

        Parameters
        ----------
        size : int
            Largest pattern size to count, 3, 4 or 5. Smaller sizes are
            always included.
        profiles : str, optional
            ``"vertex"`` or ``"edge"`` to attach per-vertex or per-edge
            triangle, 4-cycle and 4-clique counts.
        oracle_check : bool
            Compare every count with brute-force enumeration; raises
            :class:`IntegrityError` on a mismatch.
        trends : bool
            Attach the ratios computed by :func:`emit_trends`.
        timings : bool
            Attach per-stage wall-clock seconds. Off by default, since timings
            make otherwise identical reports differ.
        """
        if size not in (3, 4, 5):
            raise ValueError(f"size must be 3, 4 or 5, got {size}")
        if profiles is not None and profiles not in PROFILE_KINDS:
            raise ValueError(f"profiles must be one of {PROFILE_KINDS}, got {profiles!r}")

        stage_times: Dict[str, float] = {}
        report = CountReport(
            metadata={
                "input": g.name,
                "n": g.n,
                "m": g.m,
                "dropped_edges": g.dropped,
                "size": size,
                "cutcount_version": __version__,
            }
        )

        with stage_timer(stage_times, "orient"):
            dag = build_degree_ordered_dag(g)
        with stage_timer(stage_times, "triangles"):
            wedges = count_wedges(g, dag)
            tri = enumerate_triangles(
                g, dag, memory_budget=self.memory_budget, materialize=size == 5
            )
        report.add_counts(self._with_disconnected(three_report(g, wedges, tri), g))
        report.stats.update(
            {
                "wedges": str(wedges.wedges),
                "triangles": str(tri.total),
                "wedge_direction_ratios": wedges.ratios(),
            }
        )

        aux = None
        if size >= 4:
            with stage_timer(stage_times, "four"):
                four, aux = count_four(g, dag, tri)
                report.add_counts(self._with_disconnected(four, g, report))
            report.stats.update(
                {
                    "diamonds": str(aux.diamonds),
                    "tailed_triangles": str(aux.tailed_triangles),
                }
            )
        if size == 5:
            with stage_timer(stage_times, "five"):
                try:
                    five = count_five(g, dag, tri, aux, workers=self.workers)
                except BudgetExceededError as e:
                    logger.warning(f"5-vertex counts refused, keeping sizes {sorted(report.sizes)}: {e}")
                    e.report = report
                    raise
                report.add_counts(self._with_disconnected(five, g, report))
            report.stats.update({k: str(v) for k, v in five.stats.items()})

        if profiles is not None:
            report.profiles = self._profiles(g, tri, aux, profiles)
        for k, seconds in stage_times.items():
            logger.debug(f"Stage {k} took {seconds}s")
        if oracle_check:
            with stage_timer(stage_times, "oracle"):
                report.oracle_check = self.check_against_oracle(g, report)
        if trends:
            report.trends = emit_trends(report)
        if timings:
            report.timings = stage_times
        return report

    @staticmethod
    def _with_disconnected(counts, g: Graph, report: CountReport = None):
        connected = {"2-1": g.m, **counts.induced}
        if report is not None:
            for size in report.sizes:
                connected.update(report.induced(size))
        counts.disconnected = disconnected_counts(connected, g.n, counts.size)
        return counts

    @staticmethod
    def _profiles(g: Graph, tri, aux: Optional[FourAux], kind: str) -> Dict[str, object]:
        if aux is None:
            dag = build_degree_ordered_dag(g)
            _, aux = count_four(g, dag, tri)
        if kind == "vertex":
            columns = ["vertex", "degree", "triangles", "four_cycles", "four_cliques"]
            rows = [
                [g.labels[v], int(g.degrees[v]), int(tri.vertex_triangles[v]), int(aux.c4_vertex[v]), int(aux.k4_vertex[v])]
                for v in range(g.n)
            ]
        else:
            columns = ["source", "target", "triangles", "four_cycles", "four_cliques"]
            rows = [
                [g.labels[u], g.labels[v], int(tri.edge_triangles[e]), int(aux.c4_edge[e]), int(aux.k4_edge[e])]
                for e, (u, v) in enumerate(g.edges())
            ]
        return {"kind": kind, "columns": columns, "rows": rows}

    def check_against_oracle(self, g: Graph, report: CountReport) -> str:
        """Compare every count in ``report`` with brute-force enumeration.

        Returns
        -------
        str
            ``"PASS"``.

        Raises
        ------
        IntegrityError
            Naming the first pattern whose count disagrees.
        BudgetExceededError
            When the graph is too large for the oracle budget.
        """
        for size in sorted(report.sizes):
            oracle = brute_force_induced(g, size, budget=self.oracle_budget, workers=self.workers)
            for pid, value in report.induced(size).items():
                if oracle.induced[pid] != value:
                    raise IntegrityError(
                        f"induced count {value} differs from the enumerated {oracle.induced[pid]}",
                        pattern_id=pid,
                    )
            for pid, value in report.noninduced(size).items():
                if oracle.noninduced[pid] != value:
                    raise IntegrityError(
                        f"non-induced count {value} differs from the enumerated {oracle.noninduced[pid]}",
                        pattern_id=pid,
                    )
        logger.info(f"Oracle check passed for sizes {sorted(report.sizes)}")
        return "PASS"
