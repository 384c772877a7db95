"""Text and JSON forms of (oriented) Steiner triple systems.

Text format, one triple per line::

    sts 7          optional header
    1 2 3          unoriented triple
    [1,2,3]        oriented triple

JSON format: ``{"n": 7, "triples": [[1,2,3], ...]}`` or
``{"n": 7, "oriented": [[1,2,3], ...]}``.
"""

from __future__ import annotations

import json
import logging
import re
from typing import Any

from src.core.design import OrientedSTS, SteinerTripleSystem, validate_sts
from src.core.errors import DesignSyntaxError

logger = logging.getLogger(__name__)

Design = SteinerTripleSystem | OrientedSTS

_HEADER = re.compile(r"^sts\s+(?P<n>\d+)$")
_PLAIN = re.compile(r"^(?P<a>\d+)\s+(?P<b>\d+)\s+(?P<c>\d+)$")
_ORIENTED = re.compile(r"^\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*,\s*(?P<c>\d+)\s*\]$")
_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_design(text: str) -> Design:
    """Parse either wire form, dispatching on a leading ``{``.

    Args:
        text: UTF-8 text or JSON document

    Returns:
        SteinerTripleSystem for unoriented input, OrientedSTS otherwise

    Raises:
        DesignSyntaxError: On malformed input, with 1-based line and column
        SteinerError: Semantic errors from :func:`validate_sts`
    """
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def parse_text(text: str) -> Design:
    n: int | None = None
    plain: list[tuple[int, int, int]] = []
    oriented: list[tuple[int, int, int]] = []

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        column = len(raw) - len(raw.lstrip()) + 1

        header = _HEADER.match(line)
        if header:
            if n is not None or plain or oriented:
                raise DesignSyntaxError("header must be the first line", lineno, column)
            n = int(header["n"])
            continue

        match = _ORIENTED.match(line) or _PLAIN.match(line)
        if not match:
            raise DesignSyntaxError(
                f"expected 'a b c' or '[a,b,c]', got {line!r}", lineno, column
            )
        points = (int(match["a"]), int(match["b"]), int(match["c"]))
        target = oriented if line.startswith("[") else plain
        if (oriented and target is plain) or (plain and target is oriented):
            raise DesignSyntaxError("mixed oriented and unoriented triples", lineno, column)
        target.append(points)

    if not plain and not oriented:
        raise DesignSyntaxError("no triples found", 1, 1)
    return _assemble(n, plain, oriented)


def parse_json(text: str) -> Design:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DesignSyntaxError(e.msg, e.lineno, e.colno) from e
    if not isinstance(payload, dict):
        raise DesignSyntaxError("top-level JSON value must be an object")

    has_plain = "triples" in payload
    has_oriented = "oriented" in payload
    if has_plain == has_oriented:
        raise DesignSyntaxError("expected exactly one of 'triples' or 'oriented'")
    n = payload.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
        raise DesignSyntaxError("'n' must be an integer")

    rows = payload["oriented" if has_oriented else "triples"]
    if not isinstance(rows, list):
        raise DesignSyntaxError("triple list must be an array")
    triples: list[tuple[int, int, int]] = []
    for row in rows:
        if (
            not isinstance(row, list)
            or len(row) != 3
            or not all(isinstance(p, int) and not isinstance(p, bool) for p in row)
        ):
            raise DesignSyntaxError(f"triple must be an array of 3 integers, got {row!r}")
        triples.append((row[0], row[1], row[2]))

    if has_oriented:
        return _assemble(n, [], triples)
    return _assemble(n, triples, [])


def parse_cycles(text: str) -> list[tuple[int, int, int]]:
    """Extract every ``[a,b,c]`` bracket from free text, in order."""
    return [(int(a), int(b), int(c)) for a, b, c in _BRACKET.findall(text)]


def _assemble(
    n: int | None,
    plain: list[tuple[int, int, int]],
    oriented: list[tuple[int, int, int]],
) -> Design:
    rows = oriented or plain
    if n is None:
        if not rows:
            raise DesignSyntaxError("empty triple list needs an explicit n")
        n = max(max(r) for r in rows)
    if oriented:
        return OrientedSTS.build(oriented, n=n)
    return validate_sts(n, plain)


def to_payload(design: Design) -> dict[str, Any]:
    if isinstance(design, OrientedSTS):
        return {"n": design.n, "oriented": [list(o.cycle) for o in design.orientation]}
    return {"n": design.n, "triples": [list(t.points) for t in design.triples]}


def serialize_json(design: Design) -> str:
    return json.dumps(to_payload(design))


def serialize_text(design: Design) -> str:
    lines = [f"sts {design.n}"]
    if isinstance(design, OrientedSTS):
        lines.extend(str(o) for o in design.orientation)
    else:
        lines.extend(str(t) for t in design.triples)
    return "\n".join(lines) + "\n"
