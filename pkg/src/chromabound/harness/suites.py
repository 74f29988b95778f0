"""Verification suites and conjecture hunts over a corpus of analyzed graphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..graph import ENUMERATION_LIMIT, Graph, GraphError, enumerate_graphs, parse_graph6, read_graph6_lines
from ..spectral import BoundReport
from .records import GraphRecord, analyze, fraction_str


class InputError(ValueError):
    """Bad corpus file or unsupported corpus parameters."""


def _is_kite(rec: GraphRecord) -> bool:
    return rec.family_match != "none"


def _is_complete(rec: GraphRecord) -> bool:
    return rec.family_match == "K_n"


def _is_star(rec: GraphRecord) -> bool:
    return rec.family_match == "K_{1,n-1}" or (rec.n == 2 and rec.family_match == "K_n")


def _is_complete_plus_isolated(rec: GraphRecord) -> bool:
    return rec.complete_plus_isolated


FAMILIES: dict[str, Callable[[GraphRecord], bool]] = {
    "kite K_k*K_{1,n-k}": _is_kite,
    "complete K_n": _is_complete,
    "star K_{1,n-1}": _is_star,
    "K_k plus isolated vertices": _is_complete_plus_isolated,
}


@dataclass(frozen=True)
class Characterization:
    """Equality in ``bound`` holds iff (or, for ``direction='if'``, whenever) the graph is in ``family``."""

    bound: str
    family: str
    direction: str = "iff"


@dataclass(frozen=True)
class Suite:
    name: str
    bounds: tuple[str, ...]
    hypotheses: dict[str, str]
    characterizations: tuple[Characterization, ...] = ()
    deletion_checks: bool = False


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite(
            "chain1",
            ("chain1.R'<=H", "chain1.H<=R", "thm11.chi<=2R", "thm12.chi<=2H", "thm13.col<=2R"),
            {"chain1.R'<=H": "all graphs", "chain1.H<=R": "all graphs",
             "thm11.chi<=2R": "m >= 1", "thm12.chi<=2H": "m >= 1",
             "thm13.col<=2R": "no isolated vertices"},
            (Characterization("thm11.chi<=2R", "K_k plus isolated vertices", "if"),
             Characterization("thm12.chi<=2H", "K_k plus isolated vertices"),
             Characterization("thm13.col<=2R", "complete K_n")),
        ),
        Suite("thm14", ("thm14.col<=2R'",), {"thm14.col<=2R'": "no isolated vertices"},
              (Characterization("thm14.col<=2R'", "kite K_k*K_{1,n-k}"),)),
        Suite("cor15", ("cor15.chi<=2R'",), {"cor15.chi<=2R'": "no isolated vertices"},
              (Characterization("cor15.chi<=2R'", "kite K_k*K_{1,n-k}"),)),
        Suite("cor17", ("cor17.col<=2H",), {"cor17.col<=2H": "no isolated vertices"},
              (Characterization("cor17.col<=2H", "complete K_n"),)),
        Suite("thm21", (), {"thm21": "all graphs, every minimum-degree vertex"}, deletion_checks=True),
        Suite("tree", ("tree.1<=R'",), {"tree.1<=R'": "trees with n >= 2"},
              (Characterization("tree.1<=R'", "star K_{1,n-1}"),)),
        Suite(
            "thm31",
            ("thm31.psi<=2m/sqrt(s+)", "thm31.2m/sqrt(s+)<=2m/mu", "thm31.2m/mu<=2R",
             "cross.1+s+/s-<=chi", "cross.m/mu<=R"),
            {b: "m >= 1" for b in ("thm31.psi<=2m/sqrt(s+)", "thm31.2m/sqrt(s+)<=2m/mu", "thm31.2m/mu<=2R",
                                   "cross.1+s+/s-<=chi", "cross.m/mu<=R")},
        ),
        Suite(
            "lem32",
            ("lem32.col(col-1)<=2m", "lem32.s++sqrt(s+)<=2m", "lem32.col<=mu+1", "lem32.mu(mu+1)<=s++sqrt(s+)"),
            {b: "m >= 1" for b in ("lem32.col(col-1)<=2m", "lem32.s++sqrt(s+)<=2m", "lem32.col<=mu+1",
                                   "lem32.mu(mu+1)<=s++sqrt(s+)")},
        ),
        Suite(
            "thm33",
            ("thm33.col<=2m/sqrt(s+)", "thm33.2m/sqrt(s+)<=2m/mu", "thm33.2m/mu<=2R"),
            {b: "m >= 1" for b in ("thm33.col<=2m/sqrt(s+)", "thm33.2m/sqrt(s+)<=2m/mu", "thm33.2m/mu<=2R")},
        ),
        Suite(
            "sec33",
            ("sec33.sqrt(s+)<=stanley", "sec33.mu<=stanley", "sec33.mu<=hong", "sec33.hong<=stanley"),
            {"sec33.sqrt(s+)<=stanley": "m >= 1", "sec33.mu<=stanley": "m >= 1",
             "sec33.mu<=hong": "m >= 1, no isolated vertices",
             "sec33.hong<=stanley": "m >= 1, no isolated vertices"},
        ),
        Suite(
            "chain36",
            ("chain36.chi<=col", "chain36.col<=Delta+1", "chain36.chi<=grundy", "chain36.grundy<=Delta+1",
             "chain36.grundy<=psi", "chain36.chi<=psi"),
            {b: "n >= 1" for b in ("chain36.chi<=col", "chain36.col<=Delta+1", "chain36.chi<=grundy",
                                   "chain36.grundy<=Delta+1", "chain36.grundy<=psi", "chain36.chi<=psi")},
        ),
    )
}


@dataclass(frozen=True)
class Hunt:
    name: str
    bound: str
    statement: str
    hypothesis: str


HUNTS: dict[str, Hunt] = {
    "c41": Hunt("c41", "c41.psi<=2R'", "psi(G) <= 2R'(G)", "no isolated vertices"),
    "c42": Hunt("c42", "c42.grundy<=2R'", "grundy(G) <= 2R'(G)", "no isolated vertices"),
    "splus": Hunt("splus", "splus.s+<=2m-n+1", "s+ <= 2m - n + 1", "connected"),
}


def number(x):
    """JSON form of a bound value: rationals as ``"p/q"``, everything else unchanged."""
    if isinstance(x, Fraction):
        return fraction_str(x)
    return x


def _float(x) -> float:
    return float(x)


@dataclass
class BoundStats:
    checked: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)
    equality_cases: list[str] = field(default_factory=list)
    min_slack: float | Fraction | None = None
    min_slack_graph: str | None = None

    def add(self, report: BoundReport) -> None:
        if report.skipped is not None:
            self.skipped += 1
            return
        self.checked += 1
        if report.violated:
            self.violations.append(_violation(report))
        if report.equality:
            self.equality_cases.append(report.graph_id)
        if self.min_slack is None or _float(report.slack) < _float(self.min_slack):
            self.min_slack = report.slack
            self.min_slack_graph = report.graph_id

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "equality_cases": self.equality_cases,
            "min_slack": None if self.min_slack is None else _float(self.min_slack),
            "min_slack_exact": number(self.min_slack) if isinstance(self.min_slack, (int, Fraction)) else None,
            "min_slack_graph": self.min_slack_graph,
        }


def _violation(report: BoundReport, kind: str = "inequality") -> dict:
    return {
        "graph6": report.graph_id,
        "bound": report.bound,
        "kind": kind,
        "lhs": number(report.lhs),
        "rhs": number(report.rhs),
    }


@dataclass
class SuiteResult:
    suite: str
    corpus: str
    hypotheses: dict[str, str]
    graphs_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    equality_cases: list[str] = field(default_factory=list)
    min_slack: float | Fraction | None = None
    min_slack_graph: str | None = None
    min_slack_bound: str | None = None
    bounds: dict[str, BoundStats] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "corpus": self.corpus,
            "hypotheses": self.hypotheses,
            "passed": self.passed,
            "graphs_checked": self.graphs_checked,
            "violations": self.violations,
            "equality_cases": self.equality_cases,
            "min_slack": None if self.min_slack is None else _float(self.min_slack),
            "min_slack_exact": number(self.min_slack) if isinstance(self.min_slack, (int, Fraction)) else None,
            "min_slack_graph": self.min_slack_graph,
            "min_slack_bound": self.min_slack_bound,
            "bounds": {name: stats.to_dict() for name, stats in self.bounds.items()},
        }


def run_suite(suite: Suite, records: Sequence[GraphRecord], corpus: str) -> SuiteResult:
    result = SuiteResult(suite.name, corpus, dict(suite.hypotheses))
    stats = {b: BoundStats() for b in suite.bounds}
    result.bounds = stats

    for rec in records:
        touched = False
        equal = False
        for name in suite.bounds:
            report = rec.bound(name)
            stats[name].add(report)
            if report.skipped is not None:
                continue
            touched = True
            equal = equal or report.equality
            if report.violated:
                result.violations.append(_violation(report))
        for ch in suite.characterizations:
            report = rec.bound(ch.bound)
            if report.skipped is not None:
                continue
            member = FAMILIES[ch.family](rec)
            mismatch = (member and not report.equality) or (
                ch.direction == "iff" and report.equality and not member
            )
            if mismatch:
                result.violations.append(_violation(report, f"equality set != {ch.family}"))
        if suite.deletion_checks:
            touched = True
            for d in rec.deletions:
                if not d.ok:
                    result.violations.append({
                        "graph6": rec.graph6,
                        "bound": "thm21.delta>=0 and (delta=0 <=> condition)",
                        "kind": "deletion",
                        "vertex": d.vertex,
                        "delta": number(d.delta),
                        "condition": d.condition,
                    })
                if d.delta == 0:
                    equal = True
                if result.min_slack is None or d.delta < result.min_slack:
                    result.min_slack = d.delta
                    result.min_slack_graph = rec.graph6
                    result.min_slack_bound = "thm21.delta>=0"
        if touched:
            result.graphs_checked += 1
        if equal:
            result.equality_cases.append(rec.graph6)

    for name, st in stats.items():
        if st.min_slack is not None and (
            result.min_slack is None or _float(st.min_slack) < _float(result.min_slack)
        ):
            result.min_slack = st.min_slack
            result.min_slack_graph = st.min_slack_graph
            result.min_slack_bound = name
    return result


@dataclass
class HuntResult:
    hunt: Hunt
    corpus: str
    graphs_checked: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    min_slack: float | Fraction | None = None
    min_slack_graphs: list[str] = field(default_factory=list)
    tight_graphs: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.counterexamples)

    def to_dict(self) -> dict:
        return {
            "hunt": self.hunt.name,
            "statement": self.hunt.statement,
            "hypothesis": self.hunt.hypothesis,
            "corpus": self.corpus,
            "graphs_checked": self.graphs_checked,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
            "min_slack": None if self.min_slack is None else _float(self.min_slack),
            "min_slack_exact": number(self.min_slack) if isinstance(self.min_slack, (int, Fraction)) else None,
            "min_slack_graphs": self.min_slack_graphs,
            "tight_graphs": self.tight_graphs,
        }


def run_hunt(hunt: Hunt, records: Sequence[GraphRecord], corpus: str) -> HuntResult:
    result = HuntResult(hunt, corpus)
    for rec in records:
        report = rec.bound(hunt.bound)
        if report.skipped is not None:
            result.skipped += 1
            continue
        result.graphs_checked += 1
        if report.violated:
            result.counterexamples.append(rec.to_dict())
        if report.equality:
            result.tight_graphs.append(rec.graph6)
        slack = report.slack
        if result.min_slack is None or _float(slack) < _float(result.min_slack) - report.tol:
            result.min_slack = slack
            result.min_slack_graphs = [rec.graph6]
        elif abs(_float(slack) - _float(result.min_slack)) <= report.tol:
            if report.exact and slack != result.min_slack:
                continue
            result.min_slack_graphs.append(rec.graph6)
    return result


# corpora ----------------------------------------------------------------------

def enumerated_corpus(n_max: int, connected: bool = False) -> list[Graph]:
    if not 1 <= n_max <= ENUMERATION_LIMIT:
        raise InputError(f"--n-max must be between 1 and {ENUMERATION_LIMIT}")
    filt = "connected" if connected else "all"
    return [G for n in range(1, n_max + 1) for G in enumerate_graphs(n, filt)]


def file_corpus(lines: Iterable[str], connected: bool = False) -> list[Graph]:
    graphs = []
    for lineno, text in read_graph6_lines(lines):
        try:
            G = parse_graph6(text)
        except (ValueError, GraphError) as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
        if connected and not G.is_connected():
            continue
        graphs.append(G)
    return graphs


def analyze_all(graphs: Sequence[Graph], jobs: int = 1) -> list[GraphRecord]:
    """Analyze graphs, in parallel when ``jobs > 1``; output order always follows input order."""
    if jobs <= 1 or len(graphs) < 2:
        return [analyze(G) for G in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(analyze, graphs, chunksize=max(1, len(graphs) // (4 * jobs))))
