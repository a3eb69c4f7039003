# -*- coding: utf-8 -*-
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from srg_lab import __version__
from srg_lab.app import App, AppConfig, UsageError
from srg_lab.config import EXIT_FAILURE, EXIT_OK, KMAX_LIMIT, PALEY_ORDERS
from srg_lab.graph import Graph, SrgReport, is_strongly_regular
from srg_lab.graph6 import Graph6Error, parse_graph6, to_graph6
from srg_lab.paley import paley_graph
from srg_lab.params import (
    FeasibilityVerdict,
    SrgParams,
    enumerate_family,
    family_status,
)
from srg_lab.spectral import SpectralReport, check_adjacency_identity
from srg_lab_apps.cli.style import Style
from srg_lab_apps.proof.core import ProofConfig, prove_nonexistence_19
from srg_lab_apps.proof.replay import ReplayReport, replay_file
from srg_lab_apps.proof.trace import ProofTrace
from srg_lab_apps.search.core import (
    SearchConfig,
    SearchOutcome,
    default_jobs,
    exhaustive_search,
)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Base
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class CliApp(App):
    """Subcommand app: results on stdout, diagnostics through the logger on stderr."""

    def __init__(self, app_id: str, args: argparse.Namespace) -> None:
        super().__init__(app_id, app_config=AppConfig(debug=getattr(args, "debug", False)))
        self.args = args
        self.out = sys.stdout
        self.style = Style(self.out)

    @property
    def as_json(self) -> bool:
        return self.args.format == "json"

    def emit(self, text: str = "") -> None:
        print(text, file=self.out)

    def emit_json(self, data: Any) -> None:
        print(json.dumps(data, indent=1), file=self.out)

    def params_from_args(self) -> SrgParams:
        try:
            return SrgParams(self.args.n, self.args.k, self.args.lam, self.args.mu)
        except ValueError as exc:
            raise UsageError(f"invalid parameters: {exc}") from exc


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# feasible
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class FeasibleApp(CliApp):

    def on_prepare(self) -> None:
        if not 0 <= self.args.kmax <= KMAX_LIMIT:
            raise UsageError(f"--kmax must be within 0..{KMAX_LIMIT}: {self.args.kmax}")
        if self.args.lam < 0 or self.args.mu < 1:
            raise UsageError(f"need lambda >= 0 and mu >= 1: "
                             f"lambda={self.args.lam}, mu={self.args.mu}")
        self._verdicts: List[FeasibilityVerdict] = []

    def on_execute(self) -> None:
        self._verdicts = enumerate_family(self.args.lam, self.args.mu, self.args.kmax)

    def on_report(self) -> None:
        if self.as_json:
            self.emit_json([verdict.to_dict() for verdict in self._verdicts])
            return
        self.emit(self.style.head(f"{'k':>8} {'n':>12}  pass  {'reason':<48} status"))
        for verdict in self._verdicts:
            p = verdict.params
            self.emit(f"{p.k:>8} {p.n:>12}  {self.style.verdict(verdict.passes_integrality)}  "
                      f"{verdict.reason.value:<48} {family_status(verdict)}")


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# check
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _describe(report: SrgReport) -> str:
    if report.is_srg:
        return "ok"
    if report.degree_violation is not None:
        d = report.degree_violation
        return f"{report.reason} | vertex: {d.v} | degree: {d.observed}"
    if report.violating_pair is not None:
        v = report.violating_pair
        return (f"{report.reason} | pair: ({v.u}, {v.v}) | "
                f"common: {v.observed} | expected: {v.expected}")
    return report.reason


def _read_lines(path: Optional[str]) -> List[str]:
    """Input lines decoded one by one so a bad byte is reported with its line."""
    if path in (None, "-"):
        buffer = getattr(sys.stdin, "buffer", None)
        if buffer is None:
            return sys.stdin.read().splitlines()
        raw = buffer.read()
    else:
        with open(path, "rb") as file:
            raw = file.read()

    lines = []
    for lineno, chunk in enumerate(raw.splitlines(), start=1):
        try:
            lines.append(chunk.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise UsageError(f"decode error | line: {lineno} | "
                             f"offset: {exc.start} | {exc.reason}") from exc
    return lines


class CheckApp(CliApp):

    def on_prepare(self) -> None:
        self._params = self.params_from_args()
        self._graphs: List[Tuple[int, str, Graph]] = []
        for lineno, line in enumerate(_read_lines(self.args.path), start=1):
            if not line.strip():
                continue
            try:
                self._graphs.append((lineno, line.strip(), parse_graph6(line.strip())))
            except Graph6Error as exc:
                raise UsageError(f"parse error | line: {lineno} | "
                                 f"offset: {exc.offset} | {exc.reason}") from exc

    def on_execute(self) -> None:
        self._reports: List[Tuple[int, str, SrgReport]] = []
        self._spectral: Dict[int, SpectralReport] = {}
        for lineno, line, g in self._graphs:
            if g.n != self._params.n:
                raise UsageError(f"order mismatch | line: {lineno} | "
                                 f"graph: {g.n} | params: {self._params.n}")
            self._reports.append((lineno, line, is_strongly_regular(g, self._params)))
            if self.args.spectral:
                self._spectral[lineno] = check_adjacency_identity(g, self._params)

    def _passes(self, lineno: int, report: SrgReport) -> bool:
        spectral = self._spectral.get(lineno)
        return report.is_srg and (spectral is None or spectral.ok)

    def on_report(self) -> None:
        if not self._reports:
            self.logger.warning("no graphs checked | input is empty")
        passed = sum(1 for lineno, _, report in self._reports if self._passes(lineno, report))
        self.exit_code = EXIT_OK if passed == len(self._reports) else EXIT_FAILURE

        if self.as_json:
            rows = []
            for lineno, line, report in self._reports:
                row = {"line": lineno, "graph6": line, **report.to_dict()}
                if lineno in self._spectral:
                    row["spectral"] = self._spectral[lineno].to_dict()
                rows.append(row)
            self.emit_json(rows)
            return
        for lineno, line, report in self._reports:
            text = (f"line {lineno}: {self.style.verdict(self._passes(lineno, report))} "
                    f"{self._params} | {_describe(report)}")
            if lineno in self._spectral:
                text += f" | spectral: {'ok' if self._spectral[lineno].ok else 'fail'}"
            self.emit(text)
        self.emit(f"checked: {len(self._reports)} | passed: {passed}")


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# gen
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class GenApp(CliApp):

    def on_prepare(self) -> None:
        if self.args.q not in PALEY_ORDERS:
            raise UsageError(f"unsupported paley order: {self.args.q} "
                             f"(supported: {list(PALEY_ORDERS)})")

    def on_execute(self) -> None:
        self._graph6 = to_graph6(paley_graph(self.args.q))

    def on_report(self) -> None:
        if self.as_json:
            self.emit_json({"kind": self.args.kind, "q": self.args.q, "graph6": self._graph6})
        else:
            self.emit(self._graph6)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# prove19
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _trace_summary(trace: ProofTrace) -> Dict[str, Any]:
    cases = []
    for case in trace.cases:
        kinds: Dict[str, int] = {}
        for leaf in case.leaves:
            kinds[leaf.certificate.kind.value] = kinds.get(leaf.certificate.kind.value, 0) + 1
        cases.append({"structure": case.structure.label, "nodes": case.nodes,
                      "leaves": len(case.leaves), "certificates": dict(sorted(kinds.items())),
                      "completions": len(case.completions)})
    return {"params": str(trace.params),
            "lemmas": [lemma.to_dict() for lemma in trace.lemmas],
            "cases": cases,
            "surviving_completions": trace.surviving_completions,
            "counterexamples": trace.counterexamples,
            "elapsed_ms": trace.stats.elapsed_ms}


class Prove19App(CliApp):

    def on_execute(self) -> None:
        jobs = self.args.jobs or default_jobs()
        self._trace = prove_nonexistence_19(ProofConfig(jobs=jobs))
        if self.args.trace:
            self._trace.write_json(self.args.trace)
            self.logger.info(f"trace written | path: {self.args.trace}")

    def on_report(self) -> None:
        trace = self._trace
        summary = _trace_summary(trace)
        self.exit_code = EXIT_OK if trace.surviving_completions == 0 else EXIT_FAILURE
        if self.as_json:
            self.emit_json(summary)
            return

        self.emit(self.style.head(f"{trace.params}"))
        for lemma in trace.lemmas:
            self.emit(f"  lemma {lemma.name} ({lemma.basis}): {self.style.verdict(lemma.holds)} | "
                      f"{lemma.statement}")
        self.emit(f"  cases: {len(summary['cases'])}")
        for case in summary["cases"]:
            kinds = ", ".join(f"{kind}: {count}" for kind, count in case["certificates"].items())
            self.emit(f"    {case['structure']}: nodes {case['nodes']} | "
                      f"leaves {case['leaves']} | {kinds}")
        if trace.surviving_completions:
            self.emit(self.style.fail(f"  surviving completions: {trace.surviving_completions}"))
            for graph6 in trace.counterexamples:
                self.emit(f"    counterexample: {graph6}")
        else:
            self.emit(self.style.ok("  surviving completions: 0 | nonexistent"))


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# replay
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class ReplayApp(CliApp):

    def on_execute(self) -> None:
        try:
            self._report: ReplayReport = replay_file(self.args.path)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed trace: missing {exc}") from exc

    def on_report(self) -> None:
        report = self._report
        self.exit_code = EXIT_OK if report.ok else EXIT_FAILURE
        if self.as_json:
            self.emit_json(report.to_dict())
            return
        for failure in report.failures:
            leaf = "-" if failure.leaf_index is None else failure.leaf_index
            self.emit(self.style.fail(f"broken | case: {failure.case} | leaf: {leaf} | "
                                      f"path: {[list(step) for step in failure.path]} | "
                                      f"{failure.reason}"))
        if report.surviving_completions:
            self.emit(self.style.fail(f"surviving completions: {report.surviving_completions}"))
        verdict = self.style.ok("replay ok") if report.ok else self.style.fail("replay failed")
        self.emit(f"{verdict} | leaves: {report.checked_leaves}")


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# search
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class SearchApp(CliApp):

    def on_prepare(self) -> None:
        self._params = self.params_from_args()
        self._config = SearchConfig(jobs=self.args.jobs or default_jobs(),
                                    split_depth=self.args.split_depth,
                                    progress=self.args.progress)

    def on_execute(self) -> None:
        self._outcome: SearchOutcome = exhaustive_search(self._params, self.args.seeded,
                                                         self._config)

    def on_report(self) -> None:
        outcome = self._outcome
        if self.as_json:
            self.emit_json(outcome.to_dict())
            return
        self.emit(self.style.head(f"{outcome.params} {'seeded' if outcome.seeded else 'unseeded'}"))
        self.emit(f"  solutions: {len(outcome.solutions)} | nodes: {outcome.nodes_explored} | "
                  f"max_depth: {outcome.max_depth} | wall_time_ms: {outcome.wall_time_ms}")
        for graph6 in outcome.solutions:
            self.emit(graph6)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Parser
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

_APPS = {
    "feasible": FeasibleApp,
    "check": CheckApp,
    "gen": GenApp,
    "prove19": Prove19App,
    "search": SearchApp,
    "replay": ReplayApp,
}


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--lambda", dest="lam", type=int, required=True)
    parser.add_argument("--mu", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--debug", action="store_true", help="log at debug level")

    parser = argparse.ArgumentParser(prog="srg-lab",
                                     description="strongly regular graph toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    feasible = sub.add_parser("feasible", parents=[common],
                              help="integrality test over a lambda, mu family")
    feasible.add_argument("--lambda", dest="lam", type=int, default=1)
    feasible.add_argument("--mu", type=int, default=2)
    feasible.add_argument("--kmax", type=int, required=True)

    check = sub.add_parser("check", parents=[common], help="verify graph6 lines")
    check.add_argument("path", nargs="?", default="-")
    check.add_argument("--spectral", action="store_true",
                       help="also check the adjacency-matrix identity")
    _add_params(check)

    gen = sub.add_parser("gen", parents=[common], help="construct a named graph")
    gen.add_argument("kind", choices=("paley",))
    gen.add_argument("--q", type=int, required=True)

    prove = sub.add_parser("prove19", parents=[common], help="srg(19,6,1,2) case analysis")
    prove.add_argument("--trace", default=None, help="write the proof trace as json")
    prove.add_argument("--jobs", type=int, default=1, help="0 uses all physical cores")

    search = sub.add_parser("search", parents=[common], help="exhaustive srg search")
    _add_params(search)
    search.add_argument("--seeded", action="store_true")
    search.add_argument("--jobs", type=int, default=1, help="0 uses all physical cores")
    search.add_argument("--split-depth", type=int, default=SearchConfig.split_depth)
    search.add_argument("--progress", action="store_true")

    replay = sub.add_parser("replay", parents=[common], help="re-validate a proof trace")
    replay.add_argument("path")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    app = _APPS[args.command](args.command, args)
    return app.run()
