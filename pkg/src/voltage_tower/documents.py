"""JSON interchange formats and DOT export.

Graphs travel as ``voltage-tower/graph-v1`` documents and invariant
reports as ``voltage-tower/invariants-v1``; spanning-tree counts and
polynomial coefficients are serialized as decimal strings because they
outgrow 64-bit consumers quickly.  Unknown fields are rejected.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .errors import DocumentError
from .graph import DirectedMultigraph
from .iwasawa import IwasawaInvariants, TowerReport

GRAPH_SCHEMA = "voltage-tower/graph-v1"
INVARIANTS_SCHEMA = "voltage-tower/invariants-v1"
TOWER_REPORT_SCHEMA = "voltage-tower/tower-report-v1"

_UNDIRECTED_PREFIX = "undirected("


def graph_to_document(g: DirectedMultigraph) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": GRAPH_SCHEMA,
        "name": g.name,
        "directed": not g.is_undirected_image(),
        "vertex_count": g.vertex_count,
        "edges": [[s, t] for s, t in g.edges],
    }
    if g.vertex_labels is not None:
        doc["labels"] = list(g.vertex_labels)
    return doc


def graph_from_document(doc: Any) -> DirectedMultigraph:
    if not isinstance(doc, dict):
        raise DocumentError("graph document must be a JSON object")
    allowed = {"schema", "name", "directed", "vertex_count", "labels", "edges"}
    unknown = set(doc) - allowed
    if unknown:
        raise DocumentError(f"unknown fields: {sorted(unknown)}")
    if doc.get("schema") != GRAPH_SCHEMA:
        raise DocumentError(f"expected schema {GRAPH_SCHEMA!r}")
    for key in ("name", "directed", "vertex_count", "edges"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    name = doc["name"]
    directed = doc["directed"]
    vertex_count = doc["vertex_count"]
    edges = doc["edges"]
    if not isinstance(name, str):
        raise DocumentError("name must be a string")
    if not isinstance(directed, bool):
        raise DocumentError("directed must be a boolean")
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise DocumentError("vertex_count must be a non-negative integer")
    if not isinstance(edges, list):
        raise DocumentError("edges must be a list")
    parsed_edges = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) for x in e)
        ):
            raise DocumentError(f"bad edge {e!r}")
        parsed_edges.append((e[0], e[1]))
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(
            isinstance(x, str) for x in labels
        ):
            raise DocumentError("labels must be a list of strings")
        labels = tuple(labels)
    marked = name.startswith(_UNDIRECTED_PREFIX)
    if marked and directed:
        raise DocumentError("name marks an undirected image but directed is true")
    if not directed and not marked:
        name = f"{_UNDIRECTED_PREFIX}{name})"
    try:
        return DirectedMultigraph(vertex_count, tuple(parsed_edges), labels, name)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def write_graph(g: DirectedMultigraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_document(g), fh, indent=2)
        fh.write("\n")


def read_graph(path: str) -> DirectedMultigraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
    return graph_from_document(doc)


def tower_report_to_document(
    report: TowerReport, p: int, inv: Optional[IwasawaInvariants] = None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": TOWER_REPORT_SCHEMA,
        "p": p,
        "levels": [
            {
                "n": lvl.n,
                "component_count": lvl.component_count,
                "kappa_per_component": str(lvl.kappa_per_component),
                "ord_p": lvl.ord_p,
                "predicted_ord_p": lvl.predicted_ord_p,
            }
            for lvl in report.levels
        ],
        "fitted_nu": report.fitted_nu,
        "exact_from_level": report.exact_from_level,
    }
    if inv is not None:
        doc["n0"] = inv.n0
        doc["mu"] = inv.mu
        doc["lambda"] = inv.lam
    return doc


def invariants_to_document(
    inv: IwasawaInvariants, tower_report: Optional[TowerReport] = None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": INVARIANTS_SCHEMA,
        "p": inv.p,
        "n0": inv.n0,
        "mu": inv.mu,
        "lambda": inv.lam,
        "mu_total": inv.mu_total,
        "lambda_total": inv.lam_total,
        "charpoly": [str(c) for c in inv.charpoly],
    }
    if tower_report is not None:
        doc["tower_report"] = tower_report_to_document(
            tower_report, inv.p, inv
        )
    return doc


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: DirectedMultigraph) -> str:
    undirected = g.is_undirected_image()
    kind = "graph" if undirected else "digraph"
    arrow = "--" if undirected else "->"
    lines = [f"{kind} {_dot_quote(g.name)} {{"]
    for v in range(g.vertex_count):
        label = g.vertex_labels[v] if g.vertex_labels else f"v{v}"
        lines.append(f"  n{v} [label={_dot_quote(label)}];")
    for s, t in g.edges:
        lines.append(f"  n{s} {arrow} n{t};")
    lines.append("}")
    return "\n".join(lines) + "\n"
