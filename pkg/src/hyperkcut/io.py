"""Instance files and JSON reports.

Instance files follow the hMETIS layout::

    % optional comment lines
    m n [fmt]
    [cost] v1 v2 ...        (one line per hyperedge, m lines)

Vertices are 1-indexed on disk and 0-indexed in memory; hyperedge ids are
the 0-indexed line order. ``fmt`` 1 means every hyperedge line starts with
an integer cost; absent or 0 means unit costs.
"""

from __future__ import annotations

import json

from .core import Hypergraph, InvalidArgument
from .enumerate import EnumerationReport
from .flow import TerminalCutResult

SCHEMA_VERSION = 1


class ParseError(InvalidArgument):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(line_no: int, fields: list[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        bad = next(f for f in fields if not f.lstrip("-").isdigit())
        raise ParseError(line_no, f"not an integer: {bad!r}") from None


def parse_instance(text: str) -> Hypergraph:
    lines = [
        (i, raw.split())
        for i, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("%")
    ]
    if not lines:
        raise ParseError(1, "missing header 'm n [fmt]'")
    head_no, head = lines[0]
    if len(head) not in (2, 3):
        raise ParseError(head_no, f"header must be 'm n [fmt]', got {' '.join(head)!r}")
    values = _ints(head_no, head)
    m, n = values[0], values[1]
    fmt = values[2] if len(values) == 3 else 0
    if m < 0:
        raise ParseError(head_no, f"hyperedge count must be >= 0, got {m}")
    if n < 1:
        raise ParseError(head_no, f"vertex count must be >= 1, got {n}")
    if fmt not in (0, 1):
        raise ParseError(head_no, f"unsupported fmt {fmt} (only 0 and 1)")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else head_no)
        raise ParseError(where, f"header declares {m} hyperedges, found {len(body)}")

    edges, costs = [], []
    for line_no, fields in body:
        values = _ints(line_no, fields)
        if fmt == 1:
            if not values:
                raise ParseError(line_no, "missing cost")
            cost, values = values[0], values[1:]
            if cost < 1:
                raise ParseError(line_no, f"cost must be >= 1, got {cost}")
        else:
            cost = 1
        if len(values) < 2:
            raise ParseError(line_no, f"hyperedge needs at least 2 vertices, got {len(values)}")
        for v in values:
            if not 1 <= v <= n:
                raise ParseError(line_no, f"vertex {v} outside 1..{n}")
        if len(set(values)) != len(values):
            raise ParseError(line_no, "duplicate vertex in hyperedge")
        edges.append([v - 1 for v in values])
        costs.append(cost)
    return Hypergraph(n, edges, costs)


def emit_instance(G: Hypergraph) -> str:
    weighted = any(c != 1 for c in G.costs)
    out = [f"{G.m} {G.n} 1" if weighted else f"{G.m} {G.n}"]
    for e, c in zip(G.edges, G.costs):
        verts = " ".join(str(v + 1) for v in e)
        out.append(f"{c} {verts}" if weighted else verts)
    return "\n".join(out) + "\n"


def report_to_dict(report: EnumerationReport, timing: bool = True) -> dict:
    s = report.stats
    return {
        "schema_version": SCHEMA_VERSION,
        "k": report.k,
        "opt_value": report.opt_value,
        "cut_sets": [list(c.edge_ids) for c in report.family],
        "stats": {
            "terminal_cut_calls": s.terminal_cut_calls,
            "candidate_sets": s.candidate_sets,
            "candidate_cutsets": s.candidate_cutsets,
            "millis": s.millis if timing else 0,
        },
    }


def report_to_json(report: EnumerationReport, timing: bool = True) -> str:
    return json.dumps(report_to_dict(report, timing)) + "\n"


def terminal_cut_to_json(S, T, result: TerminalCutResult) -> str:
    """Terminal-cut report; vertices 1-indexed like instance files."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "S": sorted(v + 1 for v in S),
        "T": sorted(v + 1 for v in T),
        "value": result.value,
        "source_minimal": sorted(v + 1 for v in result.source_minimal),
        "source_maximal": sorted(v + 1 for v in result.source_maximal),
    }
    return json.dumps(payload) + "\n"
