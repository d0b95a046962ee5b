"""Exact planar primitives on rational coordinates.

Everything here works on :class:`fractions.Fraction` values, so every
predicate is decided exactly. Degenerate configurations (collinear
overlaps, endpoint incidences, tangencies) are reported as errors and
never perturbed away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence


class GeometryError(ValueError):
    pass


class Degenerate(GeometryError):
    pass


class NotSimple(GeometryError):
    pass


class PointOnCurve(GeometryError):
    pass


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):  # type: ignore[override]
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, s) -> "Point2":
        return Point2(self.x * s, self.y * s)


def point(x, y) -> Point2:
    return Point2(Fraction(x), Fraction(y))


def cross(a: Point2, b: Point2) -> Fraction:
    return a.x * b.y - a.y * b.x


def orient(a: Point2, b: Point2, c: Point2) -> Fraction:
    """Twice the signed area of triangle abc (positive when counterclockwise)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Polyline:
    """A closed polygonal curve; vertex order gives the orientation."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(Point2(Fraction(v[0]), Fraction(v[1])) for v in self.vertices)
        if len(verts) < 3:
            raise Degenerate("a closed polyline needs at least 3 vertices")
        for i, v in enumerate(verts):
            if v == verts[(i + 1) % len(verts)]:
                raise Degenerate(f"zero-length edge at vertex {i}")
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def segment(self, i: int) -> tuple[Point2, Point2]:
        n = len(self.vertices)
        return self.vertices[i % n], self.vertices[(i + 1) % n]

    def segments(self):
        n = len(self.vertices)
        for i in range(n):
            yield i, self.vertices[i], self.vertices[(i + 1) % n]

    def direction(self, i: int) -> Point2:
        a, b = self.segment(i)
        return b - a

    def reversed(self) -> "Polyline":
        return Polyline(tuple(reversed(self.vertices)))

    def rotated(self, shift: int) -> "Polyline":
        """Same curve, traversal starting at vertex ``shift``."""
        s = shift % len(self.vertices)
        return Polyline(self.vertices[s:] + self.vertices[:s])

    def map(self, f) -> "Polyline":
        return Polyline(tuple(f(v) for v in self.vertices))

    def point_at(self, seg: int, t: Fraction) -> Point2:
        a, b = self.segment(seg)
        return Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


@dataclass(frozen=True)
class CrossingPoint:
    """A transversal crossing of curve ``a`` with curve ``b``.

    ``epsilon`` is +1 when ``b`` passes from the right of ``a`` to its left.
    """

    position: Point2
    seg_a: int
    t: Fraction
    seg_b: int
    u: Fraction
    epsilon: int

    @property
    def key_a(self):
        return (self.seg_a, self.t)

    @property
    def key_b(self):
        return (self.seg_b, self.u)

    def swapped(self) -> "CrossingPoint":
        return CrossingPoint(self.position, self.seg_b, self.u, self.seg_a, self.t, -self.epsilon)


def _bbox_disjoint(p0, p1, q0, q1) -> bool:
    return (
        max(p0.x, p1.x) < min(q0.x, q1.x)
        or max(q0.x, q1.x) < min(p0.x, p1.x)
        or max(p0.y, p1.y) < min(q0.y, q1.y)
        or max(q0.y, q1.y) < min(p0.y, p1.y)
    )


def _on_closed_segment(p: Point2, a: Point2, b: Point2) -> bool:
    return (
        orient(a, b, p) == 0
        and min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segment_intersection(p0: Point2, p1: Point2, q0: Point2, q1: Point2):
    """Intersect segments p0p1 and q0q1.

    Returns ``(point, t, u)`` with ``point = p0 + t (p1 - p0) = q0 + u (q1 - q0)``
    for a transversal crossing of the open segments, ``None`` when they are
    disjoint. Any other contact raises :class:`Degenerate`.
    """
    if p0 == p1 or q0 == q1:
        raise Degenerate("zero-length segment")
    if _bbox_disjoint(p0, p1, q0, q1):
        return None
    r = p1 - p0
    s = q1 - q0
    denom = cross(r, s)
    qp = q0 - p0
    if denom == 0:
        if cross(qp, r) != 0:
            return None
        if (
            _on_closed_segment(q0, p0, p1)
            or _on_closed_segment(q1, p0, p1)
            or _on_closed_segment(p0, q0, q1)
        ):
            raise Degenerate(f"collinear overlap near {_fmt(q0)}")
        return None
    t = cross(qp, s) / denom
    u = cross(qp, r) / denom
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    if t == 0 or t == 1 or u == 0 or u == 1:
        raise Degenerate(f"endpoint incidence at {_fmt(p0 + r.scale(t))}")
    return p0 + r.scale(t), t, u


def _fmt(p: Point2) -> str:
    return f"({p.x}, {p.y})"


def _adjacent(i: int, j: int, n: int) -> bool:
    return (i + 1) % n == j or (j + 1) % n == i


def _check_adjacent(a: Polyline, i: int, j: int) -> None:
    # Consecutive edges share a vertex; they may only touch there.
    n = len(a)
    if (j + 1) % n == i:
        i, j = j, i
    p0, p1 = a.segment(i)
    _, q1 = a.segment(j)
    if orient(p0, p1, q1) == 0 and (q1 - p1).x * (p1 - p0).x + (q1 - p1).y * (p1 - p0).y < 0:
        raise Degenerate(f"edge folds back at vertex {(i + 1) % n}")


def curve_intersections(a: Polyline, b: Polyline) -> list[CrossingPoint]:
    """All crossings of two distinct curves, ordered along ``a``."""
    out = []
    for i, p0, p1 in a.segments():
        for j, q0, q1 in b.segments():
            hit = segment_intersection(p0, p1, q0, q1)
            if hit is None:
                continue
            pos, t, u = hit
            eps = sign(cross(p1 - p0, q1 - q0))
            out.append(CrossingPoint(pos, i, t, j, u, eps))
    out.sort(key=lambda c: c.key_a)
    _reject_coincident(out)
    return out


def self_intersections(a: Polyline) -> list[CrossingPoint]:
    """Double points of one curve, each reported once with ``key_a < key_b``."""
    n = len(a)
    out = []
    for i in range(n):
        p0, p1 = a.segment(i)
        for j in range(i + 1, n):
            if _adjacent(i, j, n):
                _check_adjacent(a, i, j)
                continue
            q0, q1 = a.segment(j)
            hit = segment_intersection(p0, p1, q0, q1)
            if hit is None:
                continue
            pos, t, u = hit
            out.append(CrossingPoint(pos, i, t, j, u, sign(cross(p1 - p0, q1 - q0))))
    out.sort(key=lambda c: c.key_a)
    _reject_coincident(out)
    return out


def _reject_coincident(crossings: Sequence[CrossingPoint]) -> None:
    seen = set()
    for c in crossings:
        if c.position in seen:
            raise Degenerate(f"triple point at {_fmt(c.position)}")
        seen.add(c.position)


def signed_area(a: Polyline) -> Fraction:
    """Shoelace area; positive iff ``a`` runs anticlockwise."""
    if self_intersections(a):
        raise NotSimple("signed area is only defined here for simple curves")
    return shoelace(a.vertices)


def shoelace(vertices: Sequence[Point2]) -> Fraction:
    n = len(vertices)
    total = Fraction(0)
    for i in range(n):
        total += cross(vertices[i], vertices[(i + 1) % n])
    return total / 2


def orientation_flag(a: Polyline) -> int:
    """0 for an anticlockwise curve, 1 for a clockwise one."""
    return 0 if shoelace(a.vertices) > 0 else 1


def winding_number(p: Point2, a: Polyline | Sequence[Point2]) -> int:
    """Exact winding number of the closed curve ``a`` around ``p``."""
    verts = a.vertices if isinstance(a, Polyline) else tuple(a)
    n = len(verts)
    w = 0
    for i in range(n):
        v0, v1 = verts[i], verts[(i + 1) % n]
        o = orient(v0, v1, p)
        if o == 0 and _on_closed_segment(p, v0, v1):
            raise PointOnCurve(f"{_fmt(p)} lies on the curve")
        if v0.y <= p.y:
            if v1.y > p.y and o > 0:
                w += 1
        elif v1.y <= p.y and o < 0:
            w -= 1
    return w


@dataclass(frozen=True)
class Violation:
    kind: str
    location: Point2
    curves: tuple
    detail: str = ""


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_general_position(curves: Iterable[Polyline]) -> ValidationReport:
    """Check that every incidence among ``curves`` is a transversal double point.

    Curves are numbered from 1 in the report.
    """
    curves = list(curves)
    report = ValidationReport()
    segs = []
    for ci, c in enumerate(curves, start=1):
        n = len(c)
        for i, p0, p1 in c.segments():
            segs.append((ci, i, n, p0, p1))

    vertex_owner: dict[Point2, tuple] = {}
    for ci, c in enumerate(curves, start=1):
        for vi, v in enumerate(c.vertices):
            if v in vertex_owner:
                report.violations.append(
                    Violation("VertexIncidence", v, (vertex_owner[v][0], ci), "shared vertex")
                )
            else:
                vertex_owner[v] = (ci, vi)

    points: dict[Point2, int] = {}
    for x in range(len(segs)):
        ca, i, n, p0, p1 = segs[x]
        for y in range(x + 1, len(segs)):
            cb, j, m, q0, q1 = segs[y]
            if ca == cb and _adjacent(i, j, n):
                try:
                    _check_adjacent(curves[ca - 1], i, j)
                except Degenerate as exc:
                    report.violations.append(Violation("Overlap", p1, (ca,), str(exc)))
                continue
            if _bbox_disjoint(p0, p1, q0, q1):
                continue
            try:
                hit = segment_intersection(p0, p1, q0, q1)
            except Degenerate as exc:
                kind = "Overlap" if "collinear" in str(exc) else "VertexIncidence"
                loc = _contact_point(p0, p1, q0, q1)
                if kind == "VertexIncidence" and loc in vertex_owner and _shared(loc, p0, p1, q0, q1):
                    # shared vertices are reported once above
                    continue
                report.violations.append(Violation(kind, loc, (ca, cb), str(exc)))
                continue
            if hit is None:
                continue
            pos = hit[0]
            points[pos] = points.get(pos, 0) + 1
    for pos, count in points.items():
        if count > 1:
            report.violations.append(Violation("TriplePoint", pos, (), f"{count} crossings coincide"))
    unique = []
    for v in report.violations:
        if all((v.kind, v.location) != (u.kind, u.location) for u in unique):
            unique.append(v)
    report.violations = unique
    return report


def _shared(loc, p0, p1, q0, q1) -> bool:
    return loc in (p0, p1) and loc in (q0, q1)


def _contact_point(p0, p1, q0, q1) -> Point2:
    for cand, (a, b) in ((q0, (p0, p1)), (q1, (p0, p1)), (p0, (q0, q1)), (p1, (q0, q1))):
        if _on_closed_segment(cand, a, b):
            return cand
    return p0
