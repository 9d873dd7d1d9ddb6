# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Bridge to the clique-density linear program.

The LP has one variable ``y_i`` per vertex and one ``x_<ids>`` per k-clique::

    max   sum of x over cliques
    s.t.  x_C <= y_i      for every clique C and every i in C
          sum_i y_i <= 1
          x, y >= 0

Its optimum equals the best clique density. This module writes the LP in
lp_solve text format, reads solutions back, builds the feasible point of a
vertex set, and rounds a solution to a vertex set by scanning level sets.
Nothing here solves the LP.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
import re
from typing import Final

from .cliques import CliqueIndex
from .exceptions import ParameterError, SolutionParseError
from .graph import Graph, VertexSet
from .utils import get_logger


_logger = get_logger("trident.lp")

FEASIBILITY_TOLERANCE: Final[Fraction] = Fraction(1, 10**9)
"""Slack allowed on every constraint of an externally solved instance."""

_VARIABLE = re.compile(r"^(?:y_(\d+)|x_(\d+(?:_\d+)+))$")


def y_name(v: int) -> str:
    return f"y_{v}"


def x_name(clique: Iterable[int]) -> str:
    return "x_" + "_".join(str(v) for v in clique)


@dataclass(frozen=True, slots=True)
class LpSolution:
    """A point of the LP with exact coordinates.

    Attributes:
        y: One value per vertex, by internal id.
        x: Value per clique tuple; cliques absent from the map are 0.
    """

    y: tuple[Fraction, ...]
    x: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    @property
    def objective(self) -> Fraction:
        return sum(self.x.values(), Fraction(0))

    def violations(self, index: CliqueIndex, tolerance: Fraction = FEASIBILITY_TOLERANCE) -> list[str]:
        """Every constraint broken by more than *tolerance*, as readable strings."""
        problems = [f"{y_name(v)} = {value} < 0" for v, value in enumerate(self.y) if value < -tolerance]
        total = sum(self.y, Fraction(0))
        if total > 1 + tolerance:
            problems.append(f"sum of y = {total} > 1")
        for clique, value in self.x.items():
            if value < -tolerance:
                problems.append(f"{x_name(clique)} = {value} < 0")
            bound = min(self.y[v] for v in clique)
            if value > bound + tolerance:
                problems.append(f"{x_name(clique)} = {value} > {bound}")
        return problems

    def is_feasible(self, index: CliqueIndex, tolerance: Fraction = FEASIBILITY_TOLERANCE) -> bool:
        return not self.violations(index, tolerance)


def export_lp(graph: Graph, index: CliqueIndex) -> str:
    """Write the LP for *index* in lp_solve format.

    Lines, in order: a comment header, the objective ``max: ...;`` (``max: 0;``
    when there are no cliques), one coupling constraint ``c<j>_<i>: x_C - y_i <= 0;``
    per clique ``C`` (numbered ``j`` in index order) and member ``i``, the budget
    ``budget: y_0 + ... + y_{n-1} <= 1;``, then ``<var> >= 0;`` for every x and
    every y. Output is deterministic for a given index.
    """
    if index.n != graph.n:
        raise ParameterError("index.n", index.n, f"index was built for another graph (n={graph.n})")
    x_names = [x_name(clique) for clique in index.cliques]
    y_names = [y_name(v) for v in range(graph.n)]

    lines = [f"/* {index.k}-clique density LP: {graph.n} vertices, {len(index)} cliques */"]
    lines.append(f"max: {' + '.join(x_names) if x_names else '0'};")
    lines.append("")
    for j, clique in enumerate(index.cliques):
        lines.extend(f"c{j}_{v}: {x_names[j]} - {y_name(v)} <= 0;" for v in clique)
    if y_names:
        lines.append(f"budget: {' + '.join(y_names)} <= 1;")
    lines.append("")
    lines.extend(f"{name} >= 0;" for name in x_names)
    lines.extend(f"{name} >= 0;" for name in y_names)
    _logger.debug("exported LP with %d x and %d y variables", len(x_names), len(y_names))
    return "\n".join(lines) + "\n"


def parse_solution(text: str, index: CliqueIndex) -> LpSolution:
    """Read ``<varname> <value>`` lines into an exact :class:`LpSolution`.

    Blank lines, ``#`` comments and lines whose first token is not an LP
    variable name (solver banners such as ``Actual values of the variables:``)
    are skipped. Values are parsed as exact decimals; variables that never
    appear are 0. The point is checked against every constraint with a
    tolerance of ``1e-9``.

    Raises:
        SolutionParseError: A variable line is malformed or names an unknown
            vertex or clique.
        ParameterError: The point is infeasible beyond the tolerance.
    """
    y = [Fraction(0)] * index.n
    x: dict[tuple[int, ...], Fraction] = {}
    known = set(index.cliques)

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        match = _VARIABLE.match(tokens[0])
        if match is None:
            continue
        if len(tokens) != 2:
            raise SolutionParseError(line_number, line, "expected '<varname> <value>'")
        try:
            value = Fraction(tokens[1])
        except ValueError as exc:
            raise SolutionParseError(line_number, line, "value is not a number") from exc

        vertex, members = match.groups()
        if vertex is not None:
            v = int(vertex)
            if v >= index.n:
                raise SolutionParseError(line_number, line, f"vertex {v} is outside the graph")
            y[v] = value
        else:
            clique = tuple(int(part) for part in members.split("_"))
            if clique not in known:
                raise SolutionParseError(line_number, line, "not a clique of the graph")
            x[clique] = value

    solution = LpSolution(y=tuple(y), x=x)
    problems = solution.violations(index)
    if problems:
        raise ParameterError("solution", problems[0], f"infeasible ({len(problems)} violated constraints)")
    return solution


def format_solution(solution: LpSolution, index: CliqueIndex) -> str:
    """Inverse of :func:`parse_solution`: one ``<varname> <value>`` line per variable."""
    lines = [f"{x_name(clique)} {solution.x.get(clique, Fraction(0))}" for clique in index.cliques]
    lines.extend(f"{y_name(v)} {value}" for v, value in enumerate(solution.y))
    return "\n".join(lines) + "\n"


def feasible_from_set(index: CliqueIndex, members: VertexSet) -> LpSolution:
    """Uniform point of *members*: ``y_i = 1/|S|`` on S, ``x_C = 1/|S|`` on cliques inside S.

    Its objective is exactly ``c_k(S) / |S|``.

    Raises:
        ParameterError: *members* is empty.
    """
    if not members:
        raise ParameterError("members", [], "must be non-empty")
    share = Fraction(1, len(members))
    y = tuple(share if v in members else Fraction(0) for v in range(index.n))
    x = {clique: share for clique in index.cliques if all(v in members for v in clique)}
    return LpSolution(y=y, x=x)


def round_solution(index: CliqueIndex, solution: LpSolution) -> tuple[VertexSet, Fraction]:
    """Best level set ``{i : y_i >= r}`` over the distinct positive y values.

    Thresholds are scanned from the largest down and densities are exact;
    between equally dense level sets the smaller (earlier) one is kept. An
    all-zero ``y`` gives ``(frozenset(), 0)``.
    """
    thresholds = sorted({value for value in solution.y if value > 0}, reverse=True)
    best: VertexSet = frozenset()
    best_density = Fraction(0)
    for r in thresholds:
        level = frozenset(v for v, value in enumerate(solution.y) if value >= r)
        density = Fraction(index.count_inside(level), len(level))
        if not best or density > best_density:
            best, best_density = level, density
    return best, best_density


__all__ = [
    "FEASIBILITY_TOLERANCE",
    "LpSolution",
    "export_lp",
    "feasible_from_set",
    "format_solution",
    "parse_solution",
    "round_solution",
    "x_name",
    "y_name",
]
