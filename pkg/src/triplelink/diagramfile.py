"""JSON diagram files.

A file holds three closed polylines with rational coordinates written as
strings (``"3"``, ``"-7/2"``) and, for link diagrams, one over/under
record per crossing keyed by ``[comp_a, seg_a, comp_b, seg_b]``. Doodle
files omit ``crossings``. Components are numbered from 1 and segments
from 0; segment ``s`` runs from vertex ``s`` to vertex ``s + 1``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .doodle import Doodle
from .geometry import GeometryError, Polyline
from .linkdiagram import DiagramError, LinkDiagram

FORMAT_VERSION = 1
_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")
_TOP_FIELDS = {"version", "components", "crossings"}


class DiagramFileError(ValueError):
    pass


def _rational(s, where: str) -> Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise DiagramFileError(f"{where}: expected a rational string like '3' or '-7/2', got {s!r}")
    return Fraction(s)


def parse(obj) -> Union[Doodle, LinkDiagram]:
    if not isinstance(obj, dict):
        raise DiagramFileError("top level must be an object")
    unknown = set(obj) - _TOP_FIELDS
    if unknown:
        raise DiagramFileError(f"unknown field(s): {', '.join(sorted(unknown))}")
    if obj.get("version") != FORMAT_VERSION:
        raise DiagramFileError(f"unsupported format version {obj.get('version')!r}")
    comps = obj.get("components")
    if not isinstance(comps, list) or len(comps) != 3:
        raise DiagramFileError("'components' must be a list of 3 vertex lists")
    curves = []
    for ci, verts in enumerate(comps, start=1):
        if not isinstance(verts, list):
            raise DiagramFileError(f"component {ci}: expected a list of [x, y] pairs")
        pts = []
        for vi, v in enumerate(verts):
            where = f"component {ci} vertex {vi}"
            if not isinstance(v, list) or len(v) != 2:
                raise DiagramFileError(f"{where}: expected [x, y]")
            pts.append((_rational(v[0], where), _rational(v[1], where)))
        try:
            curves.append(Polyline(tuple(pts)))
        except GeometryError as exc:
            raise DiagramFileError(f"component {ci}: {exc}") from exc
    try:
        doodle = Doodle(curves)
    except GeometryError as exc:
        raise DiagramFileError(str(exc)) from exc
    if "crossings" not in obj:
        return doodle
    records = obj["crossings"]
    if not isinstance(records, list):
        raise DiagramFileError("'crossings' must be a list")
    bits = {}
    for n, rec in enumerate(records):
        where = f"crossing record {n}"
        if not isinstance(rec, dict) or set(rec) != {"key", "over"}:
            raise DiagramFileError(f"{where}: expected exactly the fields 'key' and 'over'")
        key = rec["key"]
        if not (isinstance(key, list) and len(key) == 4 and all(type(x) is int for x in key)):
            raise DiagramFileError(f"{where}: key must be [comp_a, seg_a, comp_b, seg_b]")
        if rec["over"] not in ("a", "b"):
            raise DiagramFileError(f"{where}: over must be 'a' or 'b'")
        key = tuple(key)
        if key in bits:
            raise DiagramFileError(f"{where}: duplicate key {list(key)}")
        bits[key] = rec["over"]
    try:
        return LinkDiagram.from_over_bits(doodle.components, bits)
    except DiagramError as exc:
        raise DiagramFileError(str(exc)) from exc


def loads(text: str) -> Union[Doodle, LinkDiagram]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFileError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse(obj)


def load(path) -> Union[Doodle, LinkDiagram]:
    return loads(Path(path).read_text())


def dumps(diagram: Union[Doodle, LinkDiagram]) -> str:
    lines = ["{", f'  "version": {FORMAT_VERSION},', '  "components": [']
    comps = diagram.components
    for ci, curve in enumerate(comps):
        verts = ", ".join(json.dumps([str(v.x), str(v.y)]) for v in curve.vertices)
        lines.append(f"    [{verts}]" + ("," if ci < len(comps) - 1 else ""))
    if isinstance(diagram, LinkDiagram):
        lines.append("  ],")
        lines.append('  "crossings": [')
        recs = sorted(diagram.crossings, key=lambda c: c.key)
        for n, c in enumerate(recs):
            rec = json.dumps({"key": list(c.key), "over": c.over})
            lines.append(f"    {rec}" + ("," if n < len(recs) - 1 else ""))
        lines.append("  ]")
    else:
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(diagram, path) -> None:
    Path(path).write_text(dumps(diagram))
