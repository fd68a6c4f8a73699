"""JSON polytope documents, report serialisation and DOT export."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .exact import format_rational, parse_rational
from .orientation import Digraph
from .polytope import Polytope, validate


class DocumentError(ValueError):
    pass


def polytope_to_doc(p: Polytope, family: str | None = None) -> dict:
    doc = {
        "name": p.name,
        "dim": p.dim,
        "vertices": [[format_rational(x) for x in v] for v in p.vertices],
        "facets": [
            {"normal": [format_rational(x) for x in f.normal],
             "offset": format_rational(f.offset),
             "vertices": list(f.vertices)}
            for f in p.facets
        ],
    }
    if family is not None:
        doc["family"] = family
    return doc


def doc_to_polytope(doc: dict, check: bool = True) -> Polytope:
    try:
        verts = [[_rat(x) for x in v] for v in doc["vertices"]]
        facets = [([_rat(x) for x in f["normal"]], _rat(f["offset"]), list(f["vertices"]))
                  for f in doc["facets"]]
        name = str(doc.get("name", "polytope"))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed polytope document: {exc}") from exc
    for _, _, ids in facets:
        if any(not isinstance(i, int) or not 0 <= i < len(verts) for i in ids):
            raise DocumentError("facet vertex index out of range")
    p = Polytope.from_data(name, verts, facets)
    if check:
        diag = validate(p)
        if not diag.valid:
            raise DocumentError("invalid polytope: " + "; ".join(diag.violations))
        if "dim" in doc and doc["dim"] != p.dim:
            raise DocumentError(f"declared dim {doc['dim']} != affine dimension {p.dim}")
    return p


def _rat(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise DocumentError(f"rationals must be strings like '3/4', got {x!r}")
    try:
        return parse_rational(str(x))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def read_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_default) + "\n"


def _default(o):
    if isinstance(o, Fraction):
        return format_rational(o)
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    if hasattr(o, "item"):  # numpy scalars
        return o.item()
    raise TypeError(f"cannot serialise {type(o).__name__}")


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj))


def read_arcs(path) -> list[tuple[int, int]]:
    """Explicit orientation file: ``{"arcs": [[u, v], ...]}`` or a bare list."""
    data = read_json(path)
    arcs = data["arcs"] if isinstance(data, dict) else data
    try:
        return [(int(u), int(v)) for u, v in arcs]
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"malformed arc list: {exc}") from exc


def to_dot(g: Digraph, p: Polytope, highlight_nodes=(), highlight_arcs=(), name="G") -> str:
    hn = set(highlight_nodes)
    ha = set(map(tuple, highlight_arcs))
    lines = [f"digraph {name} {{"]
    for i, v in enumerate(p.vertices):
        label = f"{i}:(" + ",".join(format_rational(x) for x in v) + ")"
        style = ', style=filled, fillcolor="lightblue"' if i in hn else ""
        lines.append(f'  {i} [label="{label}"{style}];')
    for u, v in g.arcs:
        style = ' [color="red", penwidth=2]' if (u, v) in ha else ""
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
