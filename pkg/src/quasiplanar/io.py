"""Reading, writing, and rendering diagrams.

The interchange format is a small JSON object: ``n`` (element count),
``covers`` and ``left`` (arrays of two-element arrays), and an optional
``name``.  Serialization is canonical: fixed key order, sorted pair lists,
compact separators, so equal diagrams produce byte-equal documents.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .diagram import validate
from .errors import DiagramError, MalformedDocument

_KEYS = ("n", "covers", "left", "name")


@dataclass(frozen=True)
class DiagramDocument:
    """The raw content of an interchange document, unvalidated."""

    n: int
    covers: tuple[tuple[int, int], ...]
    left: tuple[tuple[int, int], ...] = ()
    name: str | None = None


def _parse_pairs(value, key, n):
    if not isinstance(value, list):
        raise MalformedDocument(f"'{key}' must be an array", f"/{key}")
    out = []
    for i, entry in enumerate(value):
        if not isinstance(entry, list) or len(entry) != 2:
            raise MalformedDocument(
                "entry must be a two-element array", f"/{key}/{i}"
            )
        pair = []
        for j, v in enumerate(entry):
            if type(v) is not int:
                raise MalformedDocument(
                    "pair component must be an integer", f"/{key}/{i}/{j}"
                )
            if not 0 <= v < n:
                raise MalformedDocument(
                    f"element {v} is out of range for n={n}", f"/{key}/{i}/{j}"
                )
            pair.append(v)
        out.append(tuple(pair))
    return tuple(out)


def parse_document(text):
    """Decode JSON text into a :class:`DiagramDocument`, or explain why not.

    Raises :class:`MalformedDocument` with a JSON-pointer-style location
    for the first offending entry.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise MalformedDocument("document must be a JSON object")
    for key in data:
        if key not in _KEYS:
            raise MalformedDocument(f"unknown key {key!r}", f"/{key}")
    if "n" not in data:
        raise MalformedDocument("missing key 'n'", "/n")
    n = data["n"]
    if type(n) is not int:
        raise MalformedDocument("'n' must be an integer", "/n")
    if n < 1:
        raise MalformedDocument("'n' must be positive", "/n")
    if "covers" not in data:
        raise MalformedDocument("missing key 'covers'", "/covers")
    covers = _parse_pairs(data["covers"], "covers", n)
    left = _parse_pairs(data.get("left", []), "left", n)
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise MalformedDocument("'name' must be a string", "/name")
    return DiagramDocument(n, covers, left, name)


def to_diagram(doc):
    """Validate a parsed document into a :class:`Diagram`."""
    return validate(doc.n, doc.covers, doc.left)


def _locate(e, doc):
    """Best-effort JSON pointer for a validation error's offending entry."""
    m = re.search(r"\((\d+), (\d+)\)", str(e))
    if m:
        pair = (int(m.group(1)), int(m.group(2)))
        for key, entries in (("covers", doc.covers), ("left", doc.left)):
            if pair in entries:
                return f"/{key}/{entries.index(pair)}"
    name = type(e).__name__
    if name in ("LeftOnComparable", "LeftIncomplete", "NotLinearizable"):
        return "/left"
    if name == "NotAPartialOrder":
        return "/covers"
    return ""


def parse(text):
    """Parse and validate in one step, decorating errors with locations."""
    doc = parse_document(text)
    try:
        return to_diagram(doc)
    except DiagramError as e:
        loc = _locate(e, doc)
        if loc and not e.location:
            raise type(e)(str(e), loc) from None
        raise


def document_of(d, name=None):
    """The canonical document for a diagram: sorted covers, sorted left."""
    return DiagramDocument(
        d.n,
        tuple(sorted(d.cover_pairs())),
        tuple(sorted(d.left_pairs())),
        name,
    )


def serialize(doc, pretty=False):
    """Render a document (or diagram) as canonical JSON text.

    Key order is fixed, pair lists are sorted, and the compact form uses
    no whitespace, so equality of diagrams means equality of bytes.
    """
    if not isinstance(doc, DiagramDocument):
        doc = document_of(doc)
    data = {
        "n": doc.n,
        "covers": [list(p) for p in sorted(doc.covers)],
        "left": [list(p) for p in sorted(doc.left)],
    }
    if doc.name is not None:
        data["name"] = doc.name
    if pretty:
        return json.dumps(data, indent=2) + "\n"
    return json.dumps(data, separators=(",", ":"))


def grid_layout(d):
    """Integer drawing coordinates from the two sweep positions.

    x is the position difference, y the sum, so y strictly increases along
    every cover edge and equal-height elements spread left to right in
    sweep order.
    """
    return tuple(
        (d.lam_pos[x] - d.rho_pos[x], d.lam_pos[x] + d.rho_pos[x])
        for x in range(d.n)
    )


def render_dot(d, name=None):
    """A Graphviz document with pinned coordinates, bottom at the bottom.

    Covers point upward; render with a layout engine that honors pos
    (for example neato -n). Output is byte-deterministic.
    """
    coords = grid_layout(d)
    lines = [f"digraph {json.dumps(name or 'diagram')} {{"]
    lines.append("  rankdir=BT;")
    lines.append('  node [shape=circle, fontsize=10, width=0.3];')
    lines.append("  edge [arrowhead=none];")
    for x in range(d.n):
        cx, cy = coords[x]
        lines.append(f'  v{x} [label="{x}", pos="{cx},{cy}!"];')
    for a, b in sorted(d.cover_pairs()):
        lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
