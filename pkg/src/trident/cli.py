# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Command-line surface for trident.

Every solver command reads an edge list (``-`` for stdin) and prints a density
report with the witness labels. Reports go to stdout; logs and errors go to
stderr. Exit status: 0 success, 1 usage error, 2 bad input, 3 capacity overflow.
"""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import csv
import dataclasses
from fractions import Fraction
from importlib import metadata
import io
import json
from pathlib import Path
import sys
from typing import Any, Literal, TextIO

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .cliques import MAX_K, MIN_K, clique_index, edge_index, format_cliques, list_triangles
from .config import ExactConfig, FlowConfig, PeelConfig, TridentConfig, threads_from_env
from .exceptions import TridentError, TridentErrorCode, UsageError
from .generator import gen_planted
from .graph import DensityReport, Graph, density_report, read_edge_list
from .lp import export_lp, parse_solution, round_solution
from .solvers.exact import solve_constrained, solve_exact
from .solvers.peeling import batch_peel, greedy_ds, grow_from_query, peel
from .solvers.result import SolveResult, solve_result
from .sweep import run_sweep
from .utils import format_fraction, get_logger, setup_logger, to_json


_logger = get_logger("trident.cli")

OutputFormat = Literal["json", "csv", "table"]
CommandName = Literal[
    "tds-exact",
    "tds-peel",
    "tds-batch",
    "kds-exact",
    "kds-peel",
    "ds-exact",
    "ds-peel",
    "constrained",
    "lp-export",
    "lp-round",
    "stats",
    "gen",
    "compare",
    "cliques",
    "version",
]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_OVERFLOW = 3

# Commands whose clique order is fixed regardless of --k
_FIXED_K: dict[str, int] = {"tds-exact": 3, "tds-peel": 3, "ds-exact": 2, "ds-peel": 2, "compare": 3}


class RunConfig(BaseModel):
    """Validated arguments of one CLI invocation."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: CommandName
    input: str | None = None
    k: int = Field(3, ge=MIN_K, le=MAX_K)
    eps: float | None = Field(None, gt=0)
    sweep: tuple[float, ...] | None = None
    reference: Literal["exact", "peel"] = "exact"
    query: tuple[str, ...] = ()
    method: Literal["exact", "peel", "grow"] = "exact"
    seed: int = 0
    n: int | None = Field(None, ge=1)
    p: float | None = Field(None, gt=0, lt=1)
    gamma: float | None = Field(None, gt=0, lt=1)
    output_format: OutputFormat = "table"
    out: str | None = None
    planted: str | None = None
    solution: str | None = None
    trace: str | None = None
    tighten: bool = False
    capacity_bits: int | None = Field(None, ge=2)
    threads: int | None = Field(None, ge=1)

    @field_validator("sweep")
    @classmethod
    def _positive_sweep(cls, value: tuple[float, ...] | None) -> tuple[float, ...] | None:
        if value is not None and (not value or any(eps <= 0 for eps in value)):
            raise ValueError("every sweep epsilon must be positive")
        return value

    @model_validator(mode="after")
    def _command_requirements(self) -> RunConfig:
        if self.command not in {"gen", "version"} and self.input is None:
            raise ValueError(f"{self.command} needs an input edge list")
        if self.command == "tds-batch" and (self.eps is None) == (self.sweep is None):
            raise ValueError("tds-batch needs exactly one of --eps or --sweep")
        if self.command == "constrained" and not self.query:
            raise ValueError("constrained needs --query")
        if self.command == "gen" and (self.n is None or self.p is None or self.gamma is None):
            raise ValueError("gen needs --n, --p and --gamma")
        if self.command == "lp-round" and self.solution is None:
            raise ValueError("lp-round needs --solution")
        return self

    @property
    def clique_order(self) -> int:
        return _FIXED_K.get(self.command, self.k)

    def trident_config(self) -> TridentConfig:
        flow = FlowConfig(capacity_bits=self.capacity_bits)
        return TridentConfig(
            exact=ExactConfig(flow=flow, tighten_bounds=self.tighten),
            peel=PeelConfig(record_trace=self.trace is not None),
            threads=self.threads or threads_from_env(),
        )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _cell(value: Any, output_format: OutputFormat) -> str:
    if isinstance(value, Fraction):
        return f"{float(value):.4f}" if output_format == "table" else repr(float(value))
    return str(value)


def _render_rows(rows: Sequence[dict[str, Any]], output_format: OutputFormat) -> str:
    if output_format == "json":
        return json.dumps(to_json(list(rows)), indent=2) + "\n"
    if not rows:
        return ""
    header = list(rows[0])
    cells = [[_cell(row[key], output_format) for key in header] for row in rows]
    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buffer.getvalue()
    widths = [max(len(text) for text in column) for column in zip(header, *cells)]
    lines = ["  ".join(text.ljust(width) for text, width in zip(line, widths)).rstrip() for line in [header, *cells]]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def _report_row(graph: Graph, report: DensityReport, **leading: Any) -> dict[str, Any]:
    return {
        **leading,
        "k": report.k,
        "size": report.size,
        "edges": report.edges,
        "cliques": report.cliques,
        "f_e": report.f_e,
        "f_t": report.f_t,
        "delta": report.delta,
        "tau": report.tau,
        "tpv": report.tpv,
        "vertices": " ".join(graph.labels_of(report.members)),
    }


def _emit_result(graph: Graph, result: SolveResult, config: RunConfig, out: TextIO) -> None:
    if config.output_format == "json":
        payload = {"command": config.command, "graph": {"n": graph.n, "m": graph.m}, **result.to_payload(graph)}
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    row = _report_row(
        graph,
        result.report,
        method=result.method,
        density=format_fraction(result.density),
        iterations=result.iterations,
    )
    out.write(_render_rows([row], config.output_format))


def _write_text(text: str, destination: str | None, out: TextIO) -> None:
    if destination is None or destination == "-":
        out.write(text)
        return
    Path(destination).write_text(text, encoding="utf-8")
    _logger.info("wrote %s", destination)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _unreadable(path: str, exc: OSError) -> TridentError:
    return TridentError(f"cannot read {path}: {exc.strerror or exc}", code=TridentErrorCode.IO_ERROR)


def _load(config: RunConfig) -> Graph:
    assert config.input is not None  # enforced by RunConfig
    try:
        return read_edge_list(config.input)
    except OSError as exc:
        raise _unreadable(config.input, exc) from exc


def _cmd_exact(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    index = clique_index(graph, config.clique_order)
    result = solve_exact(graph, index, config=config.trident_config().exact)
    _emit_result(graph, result, config, out)


def _cmd_peel(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    index = clique_index(graph, config.clique_order)
    result, trace = peel(graph, index, config=config.trident_config().peel)
    if config.trace is not None:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["step", "removed_label", "count", "density_num", "density_den"])
        writer.writerows(trace.rows(graph))
        _write_text(buffer.getvalue(), config.trace, sys.stderr)
    _emit_result(graph, result, config, out)


def _cmd_batch(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    index = clique_index(graph, config.clique_order)
    if config.sweep is None:
        assert config.eps is not None  # enforced by RunConfig
        result, _ = batch_peel(graph, index, config.eps)
        _emit_result(graph, result, config, out)
        return

    reference, points = run_sweep(
        graph, index, config.sweep, reference=config.reference, config=config.trident_config()
    )
    rows = [
        {
            "epsilon": format_fraction(point.epsilon),
            "rounds": point.rounds,
            "size": point.result.report.size,
            "density": point.result.density,
            "ratio": point.density_ratio,
            "bound": point.lower_bound,
            "f_e_ratio": point.f_e_ratio,
            "f_t_ratio": point.f_t_ratio,
        }
        for point in points
    ]
    _logger.info(
        "sweep reference %s: size=%d density=%s", reference.method, reference.report.size, reference.density
    )
    out.write(_render_rows(rows, config.output_format))


def _cmd_constrained(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    index = clique_index(graph, config.clique_order)
    query = graph.vertex_set_from_labels(config.query)
    if config.method == "exact":
        result = solve_constrained(graph, index, query, config=config.trident_config().exact)
    elif config.method == "peel":
        result = dataclasses.replace(peel(graph, index, query)[0], method="constrained-peel")
    else:
        result = grow_from_query(graph, index, query)
    _emit_result(graph, result, config, out)


def _cmd_lp_export(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    _write_text(export_lp(graph, clique_index(graph, config.clique_order)), config.out, out)


def _cmd_lp_round(config: RunConfig, out: TextIO) -> None:
    assert config.solution is not None  # enforced by RunConfig
    graph = _load(config)
    index = clique_index(graph, config.clique_order)
    try:
        text = Path(config.solution).read_text(encoding="utf-8")
    except OSError as exc:
        raise _unreadable(config.solution, exc) from exc
    solution = parse_solution(text, index)
    members, _ = round_solution(index, solution)
    result = solve_result(graph, index, members, iterations=0, method="lp-round")
    _logger.info("LP objective %s, rounded density %s", solution.objective, result.density)
    _emit_result(graph, result, config, out)


def _cmd_stats(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    triangles = list_triangles(graph)
    stats: dict[str, Any] = {
        "n": graph.n,
        "m": graph.m,
        "triangles": len(triangles),
        "max_triangles_per_vertex": triangles.max_count,
    }
    if config.k != 3:
        index = clique_index(graph, config.k)
        stats[f"cliques_{config.k}"] = len(index)
        stats[f"max_cliques_{config.k}_per_vertex"] = index.max_count
    if config.output_format == "json":
        out.write(json.dumps(stats, indent=2) + "\n")
        return
    out.write(_render_rows([{"metric": key, "value": value} for key, value in stats.items()], config.output_format))


def _cmd_compare(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    triangles = list_triangles(graph)
    edges = edge_index(graph)
    exact_config = config.trident_config().exact
    runs = [
        ("DS", solve_exact(graph, edges, config=exact_config)),
        ("1/2-DS", greedy_ds(graph)[0]),
        ("TDS", solve_exact(graph, triangles, config=exact_config)),
        ("1/3-TDS", peel(graph, triangles)[0]),
    ]
    rows = []
    for name, result in runs:
        report = density_report(graph, result.best_set, triangles)
        share = Fraction(100 * report.size, graph.n) if graph.n else Fraction(0)
        rows.append(_report_row(graph, report, row=name, size_pct=share))
    out.write(_render_rows(rows, config.output_format))


def _cmd_cliques(config: RunConfig, out: TextIO) -> None:
    graph = _load(config)
    _write_text(format_cliques(graph, clique_index(graph, config.k)), config.out, out)


def _cmd_gen(config: RunConfig, out: TextIO) -> None:
    assert config.n is not None and config.p is not None and config.gamma is not None  # enforced by RunConfig
    instance = gen_planted(config.n, config.p, config.gamma, config.seed)
    _write_text(instance.edge_list_text(), config.out, out)
    sidecar = config.planted or (f"{config.out}.planted" if config.out not in (None, "-") else None)
    if sidecar is None:
        _logger.info("planted vertices: %s", " ".join(str(v) for v in instance.planted))
    else:
        Path(sidecar).write_text(instance.sidecar_text(), encoding="utf-8")


def _installed_version() -> str:
    try:
        return metadata.version("trident")
    except metadata.PackageNotFoundError:
        return "0.0.0+local"


def _cmd_version(config: RunConfig, out: TextIO) -> None:
    out.write(_installed_version() + "\n")


_COMMANDS: dict[str, Callable[[RunConfig, TextIO], None]] = {
    "tds-exact": _cmd_exact,
    "kds-exact": _cmd_exact,
    "ds-exact": _cmd_exact,
    "tds-peel": _cmd_peel,
    "kds-peel": _cmd_peel,
    "ds-peel": _cmd_peel,
    "tds-batch": _cmd_batch,
    "constrained": _cmd_constrained,
    "lp-export": _cmd_lp_export,
    "lp-round": _cmd_lp_round,
    "stats": _cmd_stats,
    "compare": _cmd_compare,
    "cliques": _cmd_cliques,
    "gen": _cmd_gen,
    "version": _cmd_version,
}


def run(config: RunConfig, out: TextIO | None = None) -> int:
    """Execute one validated command; library errors propagate to the caller."""
    _COMMANDS[config.command](config, out or sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> Any:  # type: ignore[override]
        raise UsageError(message)


def _epsilon_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from exc


def _label_list(text: str) -> tuple[str, ...]:
    return tuple(label for label in text.split(",") if label)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trident", description="Triangle- and k-clique-densest subgraph discovery.")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (default: TRIDENT_LOG_LEVEL)")
    parser.add_argument("--log-json", action="store_true", help="Emit logs as JSON lines")
    subcommands = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name: str, help_text: str, *, needs_input: bool = True, k: bool = False) -> argparse.ArgumentParser:
        sub = subcommands.add_parser(name, help=help_text)
        if needs_input:
            sub.add_argument("input", help="Edge-list file, or - for stdin")
            sub.add_argument("--format", dest="output_format", choices=["json", "csv", "table"], default="table")
        if k:
            sub.add_argument("--k", type=int, default=3, help="Clique order, 2..8 (default: 3)")
        return sub

    def exact_flags(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--tighten", action="store_true", help="Start from data-dependent search bounds")
        sub.add_argument("--capacity-bits", type=int, default=None, help="Fail instead of exceeding this width")

    exact_flags(command("tds-exact", "Exact triangle-densest subgraph"))
    exact_flags(command("kds-exact", "Exact k-clique-densest subgraph", k=True))
    exact_flags(command("ds-exact", "Exact densest subgraph (edge density)"))

    for name, help_text in [
        ("tds-peel", "1/3-approximate triangle-densest subgraph by peeling"),
        ("kds-peel", "1/k-approximate k-clique-densest subgraph by peeling"),
        ("ds-peel", "1/2-approximate densest subgraph by minimum-degree peeling"),
    ]:
        sub = command(name, help_text, k=name == "kds-peel")
        sub.add_argument("--trace", default=None, help="Write the removal trace as CSV to this file")

    batch = command("tds-batch", "Batch peeling in O(log n / eps) rounds", k=True)
    batch.add_argument("--eps", type=float, default=None, help="Approximation slack, > 0")
    batch.add_argument("--sweep", type=_epsilon_list, default=None, help="Comma-separated eps values to sweep")
    batch.add_argument("--reference", choices=["exact", "peel"], default="exact", help="Baseline for sweep ratios")
    batch.add_argument("--threads", type=int, default=None, help="Concurrent sweep points (default: TRIDENT_THREADS)")

    constrained = command("constrained", "Densest subgraph containing the query vertices", k=True)
    constrained.add_argument("--query", type=_label_list, default=(), help="Comma-separated labels")
    constrained.add_argument("--method", choices=["exact", "peel", "grow"], default="exact")
    exact_flags(constrained)

    lp_export = command("lp-export", "Write the clique-density LP in lp_solve format", k=True)
    lp_export.add_argument("--out", default=None, help="Output file (default: stdout)")
    lp_round = command("lp-round", "Round an external LP solution to a vertex set", k=True)
    lp_round.add_argument("--solution", default=None, help="File of '<varname> <value>' lines")

    command("stats", "Vertex, edge, triangle and k-clique counts", k=True)
    command("compare", "DS, 1/2-DS, TDS and 1/3-TDS side by side")
    cliques = command("cliques", "Dump every k-clique, one per line", k=True)
    cliques.add_argument("--out", default=None, help="Output file (default: stdout)")

    gen = command("gen", "Planted-clique G(n, p) instance", needs_input=False)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, required=True)
    gen.add_argument("--gamma", type=float, required=True, help="Planted clique has ceil(n**gamma) vertices")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None, help="Edge-list file (default: stdout)")
    gen.add_argument("--planted", default=None, help="Sidecar file for the planted labels")

    command("version", "Show the installed trident version", needs_input=False)
    return parser


def _exit_code(error: TridentError) -> int:
    if error.code is TridentErrorCode.USAGE_ERROR:
        return EXIT_USAGE
    if error.code in {TridentErrorCode.CAPACITY_OVERFLOW, TridentErrorCode.INTERNAL}:
        return EXIT_OVERFLOW
    return EXIT_INPUT


def _describe(error: Any) -> str:
    where = ".".join(str(part) for part in error["loc"]) or "arguments"
    return f"{where}: {error['msg']}"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        setup_logger(level=args.log_level, use_json=args.log_json or None, force=True)
        fields = {key: value for key, value in vars(args).items() if key not in {"log_level", "log_json"}}
        config = RunConfig.model_validate(fields)
        return run(config)
    except ValidationError as exc:
        problems = "; ".join(_describe(err) for err in exc.errors())
        print(f"error[{TridentErrorCode.USAGE_ERROR.value}]: {problems}", file=sys.stderr)
        return EXIT_USAGE
    except TridentError as exc:
        print(f"error[{exc.code.value}]: {exc}", file=sys.stderr)
        return _exit_code(exc)


__all__ = ["RunConfig", "main", "run"]


if __name__ == "__main__":
    raise SystemExit(main())
