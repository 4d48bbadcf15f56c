# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Batch backend of pm4cover.
    - Runs the engine, generators and oracle over many instances, in parallel across instances
    - Results always come back in input order, whatever the worker count
    - Presents tables and progress on the console with rich
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from rich import get_console
from rich.console import Console
from rich.progress import track
from rich.table import Table

from .colouring import len2_route_statistics
from .config import Settings, get_settings, set_settings
from .constants import RULE_LEN2
from .engine import TraceStep, compute_proper_cover
from .generators import GenSpec, enumerate_poles, gen_all_odd, gen_random_pole
from .graphs import CubicGraph
from .oracle import (
    brute_alternating_circuits,
    brute_force_proper_cover,
    covers_with_k_matchings,
    enumerate_perfect_matchings,
    perfect_matching_index,
)
from .pole import ThreePole, rule_for, segment_profile, verify_proper_cover

logger = logging.getLogger(__name__)


@dataclass
class SweepRow:
    n: int
    rule: str
    engine_ok: bool
    oracle_ok: bool


@dataclass
class SweepSummary:
    """Engine against oracle agreement per order n"""
    rows: List[SweepRow] = field(default_factory=list)
    len2_stats: List[Dict[str, object]] = field(default_factory=list)

    def orders(self) -> List[int]:
        return sorted({r.n for r in self.rows})

    def agreement(self, n: Optional[int] = None) -> float:
        rows = [r for r in self.rows if n is None or r.n == n]
        if not rows:
            return 1.0
        return sum(r.engine_ok and r.oracle_ok for r in rows) / len(rows)

    @property
    def ok(self) -> bool:
        return all(r.engine_ok and r.oracle_ok for r in self.rows)


@dataclass
class PoleOracleReport:
    pole: ThreePole
    cover_found: bool
    perfect_matchings: int
    alternating_circuits: int


@dataclass
class GraphOracleReport:
    graph: CubicGraph
    k: Optional[int]
    coverable: Optional[bool]
    index: Optional[int]


########################################
#          WORKERS (module level so they pickle)
########################################


def _oracle_one(pole: ThreePole) -> bool:
    witness = brute_force_proper_cover(pole)
    return witness is not None and verify_proper_cover(pole, witness).ok


def _len2_one(pole: ThreePole) -> Dict[str, object]:
    return len2_route_statistics([pole])[0]


def _gen_one(spec: GenSpec) -> ThreePole:
    return gen_random_pole(spec)


def _gen_all_odd_one(spec: GenSpec) -> ThreePole:
    return gen_all_odd(spec.n, spec.seed)


def _cover_one(pole: ThreePole):
    return compute_proper_cover(pole)


class Pm4CoverBackend:
    """
    Batch front for the engine: holds the settings and worker count every
    run uses and owns the console presentation.
    """

    def __init__(self, settings: Optional[Settings] = None, jobs: int = 1, pretty_output: bool = True, console: Optional[Console] = None):
        self.settings = settings or get_settings()
        self.jobs = max(1, jobs)
        self.pretty_output = pretty_output
        self.console = console or get_console()
        set_settings(self.settings)
        logger.info(f"Backend initialized with jobs={self.jobs} config: {self.settings}")

    def map(self, fn: Callable, items: Sequence, description: str = "Working") -> List:
        """fn over items, results in input order"""
        if self.jobs == 1 or len(items) < 2:
            return [
                fn(item)
                for item in track(items, description=description, update_period=0.05, disable=not self.pretty_output, console=self.console)
            ]
        chunksize = max(1, len(items) // (self.jobs * 8))
        with ProcessPoolExecutor(max_workers=self.jobs, initializer=set_settings, initargs=(self.settings,)) as pool:
            results = pool.map(fn, items, chunksize=chunksize)
            return list(
                track(results, total=len(items), description=description, update_period=0.05, disable=not self.pretty_output, console=self.console)
            )

    ########################################
    #          COVERS
    ########################################

    def cover(self, pole: ThreePole):
        return compute_proper_cover(pole, self.settings.engine)

    def cover_many(self, poles: Sequence[ThreePole]):
        return self.map(_cover_one, list(poles), "Covering poles")

    ########################################
    #          GENERATION
    ########################################

    def generate(self, spec: GenSpec, count: int = 1, all_odd: bool = False) -> List[ThreePole]:
        """count poles for seeds spec.seed, spec.seed + 1, ..."""
        specs = [replace(spec, seed=spec.seed + i) for i in range(count)]
        return self.map(_gen_all_odd_one if all_odd else _gen_one, specs, "Generating poles")

    def enumerate(self, n: int) -> List[ThreePole]:
        return list(enumerate_poles(n))

    ########################################
    #          SWEEP
    ########################################

    def sweep(self, max_n: int, len2_stats: bool = False) -> SweepSummary:
        """Every enumerated pole of odd order up to max_n through both the engine and the oracle"""
        summary = SweepSummary()
        for n in range(3, max_n + 1, 2):
            poles = self.enumerate(n)
            logger.info(f"Sweeping {len(poles)} poles of order {n}")
            covers = self.cover_many(poles)
            found = self.map(_oracle_one, poles, f"Oracle n={n}")
            for pole, (cover, _), oracle_ok in zip(poles, covers, found):
                engine_ok = verify_proper_cover(pole, cover).ok
                if not (engine_ok and oracle_ok):
                    logger.error(f"Disagreement on n={pole.n} spokes={pole.spokes} chords={pole.chords}")
                summary.rows.append(SweepRow(pole.n, rule_for(segment_profile(pole)), engine_ok, oracle_ok))
            if len2_stats:
                len2 = [p for p in poles if rule_for(segment_profile(p)) == RULE_LEN2]
                summary.len2_stats.extend(self.map(_len2_one, len2, f"Len2 routes n={n}"))
        return summary

    def print_sweep(self, summary: SweepSummary) -> None:
        table = Table(title="Engine against oracle")
        table.add_column("n", justify="right")
        table.add_column("Poles", justify="right")
        table.add_column("Engine verified", justify="right")
        table.add_column("Oracle found", justify="right")
        table.add_column("Agreement", justify="right")
        for n in summary.orders():
            rows = [r for r in summary.rows if r.n == n]
            table.add_row(
                f"{n}",
                f"{len(rows)}",
                f"{sum(r.engine_ok for r in rows)}",
                f"{sum(r.oracle_ok for r in rows)}",
                f"{summary.agreement(n):.0%}",
            )
        self.console.print(table)
        if summary.len2_stats:
            stats = Table(title="Length-2 colouring routes")
            stats.add_column("Poles", justify="right")
            stats.add_column("B-route succeeded", justify="right")
            stats.add_column("Backtracking succeeded", justify="right")
            stats.add_row(
                f"{len(summary.len2_stats)}",
                f"{sum(bool(r['b_route']) for r in summary.len2_stats)}",
                f"{sum(bool(r['backtrack']) for r in summary.len2_stats)}",
            )
            self.console.print(stats)
        self.console.print(f"agreement {summary.agreement():.0%}")

    ########################################
    #          ORACLE
    ########################################

    def oracle_pole(self, pole: ThreePole) -> PoleOracleReport:
        return PoleOracleReport(
            pole=pole,
            cover_found=brute_force_proper_cover(pole) is not None,
            perfect_matchings=len(enumerate_perfect_matchings(pole)),
            alternating_circuits=len(brute_alternating_circuits(pole)),
        )

    def oracle_graph(self, graph: CubicGraph, k: Optional[int] = None) -> GraphOracleReport:
        if k is not None:
            coverable, _ = covers_with_k_matchings(graph, k)
            return GraphOracleReport(graph, k, coverable, None)
        return GraphOracleReport(graph, None, None, perfect_matching_index(graph))

    def print_oracle(self, report) -> None:
        table = Table(title="Oracle")
        table.add_column("Property")
        table.add_column("Value")
        if isinstance(report, PoleOracleReport):
            table.add_row("vertices", f"{report.pole.n}")
            table.add_row("proper 4-cover", "found" if report.cover_found else "none")
            table.add_row("perfect matchings", f"{report.perfect_matchings}")
            table.add_row("alternating circuits", f"{report.alternating_circuits}")
        else:
            table.add_row("vertices", f"{report.graph.n}")
            if report.k is not None:
                verdict = "coverable" if report.coverable else "not coverable"
                table.add_row("verdict", f"{verdict} by {report.k} perfect matchings")
            else:
                table.add_row("perfect matching index", "above 5" if report.index is None else f"{report.index}")
        self.console.print(table)

    ########################################
    #          PRESENTATION
    ########################################

    def print_trace(self, trace: Iterable[TraceStep]) -> None:
        table = Table(title="Reduction trace")
        table.add_column("Rule")
        table.add_column("n before", justify="right")
        table.add_column("n after", justify="right")
        table.add_column("Detail")
        for step in trace:
            table.add_row(step.rule, f"{step.size_before}", f"{step.size_after}", step.detail)
        self.console.print(table)

