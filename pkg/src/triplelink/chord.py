"""Generalized chord diagrams G_{L_k} and their signed chord-crossing pairing.

For component ``k`` with ``(i, j, k)`` cyclic, the skeleton lists the
over-crossings of ``L_k`` in traversal order together with two base
points ``b_nc_i`` and ``b_c_j`` placed in one gap, ``b_nc_i`` first. Every
over-crossing above ``L_i`` gets a chord to ``b_nc_i`` (the set ``T_ki``),
every over-crossing above ``L_j`` a chord to ``b_c_j`` (the set ``T_kj``).
A chord starts at its crossing when the crossing is positive and ends
there when it is negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import Degenerate, Point2, cross, segment_intersection, sign
from .linkdiagram import LinkDiagram, cyclic_indices, over_crossing_sets

# Chord crossing sign: KAPPA * sign det(direction of the T_kj chord, direction
# of the T_ki chord), i.e. KAPPA * (+1 when the T_ki chord passes the T_kj
# chord from right to left). Pinned by the main-theorem harness.
KAPPA = 1

NC = "nc"
C = "c"


class RealizationFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class MarkedCrossing:
    label: int  # crossing index in the link diagram
    gamma: int
    under_component: int


@dataclass(frozen=True)
class BasePoint:
    tag: str  # NC or C
    component: int  # the i of b_nc_i or the j of b_c_j

    def __str__(self) -> str:
        return f"b_{self.tag}{self.component}"


@dataclass(frozen=True)
class OrientedChord:
    crossing_end: int  # skeleton position of the marked crossing
    base_end: int  # skeleton position of the base point
    set_tag: str  # "T_ki" or "T_kj"
    toward_base: bool

    @property
    def start(self) -> int:
        return self.crossing_end if self.toward_base else self.base_end

    @property
    def end(self) -> int:
        return self.base_end if self.toward_base else self.crossing_end


@dataclass(frozen=True)
class GeneralizedChordDiagram:
    k: int
    i: int
    j: int
    skeleton: tuple  # cyclic order of MarkedCrossing / BasePoint along L_k
    chords: tuple
    gap: int

    @property
    def T_ki(self) -> list:
        return [c for c in self.chords if c.set_tag == "T_ki"]

    @property
    def T_kj(self) -> list:
        return [c for c in self.chords if c.set_tag == "T_kj"]

    def base_position(self, tag: str) -> int:
        for n, item in enumerate(self.skeleton):
            if isinstance(item, BasePoint) and item.tag == tag:
                return n
        raise KeyError(tag)


def chord_diagram_from_marks(
    k: int, marks: Sequence[MarkedCrossing], gap: Optional[int] = None
) -> GeneralizedChordDiagram:
    """Assemble G from marked crossings in traversal order.

    ``gap`` is the number of marks preceding the base points; the default
    puts them after the last mark. All gaps describe the same cyclic
    diagram up to where the base points sit.
    """
    i, j = cyclic_indices(k)
    n = len(marks)
    if gap is None:
        gap = n
    if not 0 <= gap <= n:
        raise ValueError(f"gap index {gap} out of range 0..{n}")
    skeleton = tuple(marks[:gap]) + (BasePoint(NC, i), BasePoint(C, j)) + tuple(marks[gap:])
    nc_pos, c_pos = gap, gap + 1
    chords = []
    for pos, item in enumerate(skeleton):
        if not isinstance(item, MarkedCrossing):
            continue
        if item.under_component == i:
            chords.append(OrientedChord(pos, nc_pos, "T_ki", item.gamma > 0))
        elif item.under_component == j:
            chords.append(OrientedChord(pos, c_pos, "T_kj", item.gamma > 0))
        else:
            raise ValueError(f"mark {item} is not over component {i} or {j}")
    return GeneralizedChordDiagram(k, i, j, skeleton, tuple(chords), gap)


def build_chord_diagram(L: LinkDiagram, k: int, gap_choice: Optional[int] = None) -> GeneralizedChordDiagram:
    sets = over_crossing_sets(L, k)
    marks = [MarkedCrossing(idx, gamma, under) for idx, under, gamma in sets.sequence]
    return chord_diagram_from_marks(k, marks, gap_choice)


# ---------------------------------------------------------------------------
# Combinatorial pairing


def _in_open_arc(x: int, a: int, b: int, n: int) -> bool:
    """Whether x lies strictly inside the counterclockwise arc from a to b."""
    return 0 < (x - a) % n < (b - a) % n


def chord_crossing_sign(first: OrientedChord, second: OrientedChord, n: int) -> int:
    """Sign of det(dir first, dir second) for straight chords in a disk whose
    boundary is traversed counterclockwise; 0 when they do not cross."""
    a1, a2 = first.start, first.end
    b1, b2 = second.start, second.end
    if len({a1, a2, b1, b2}) < 4:
        return 0
    if _in_open_arc(b1, a1, a2, n) == _in_open_arc(b2, a1, a2, n):
        return 0
    return 1 if _in_open_arc(b1, a1, a2, n) else -1


def pairing_combinatorial(g: GeneralizedChordDiagram) -> int:
    n = len(g.skeleton)
    total = 0
    for q in g.T_kj:
        for p in g.T_ki:
            total += chord_crossing_sign(q, p, n)
    return KAPPA * total


# ---------------------------------------------------------------------------
# Geometric realization


def _circle_point(theta: float) -> Point2:
    t = Fraction(math.tan(theta / 2)).limit_denominator(10**6)
    d = 1 + t * t
    return Point2((1 - t * t) / d, 2 * t / d)


@dataclass(frozen=True)
class RealizedChord:
    chord: OrientedChord
    path: tuple  # crossing end first, base end last

    def segments(self):
        for a, b in zip(self.path, self.path[1:]):
            yield (a, b) if self.chord.toward_base else (b, a)


def realize_geometric(g: GeneralizedChordDiagram, rotation: int = 0) -> list[RealizedChord]:
    """Draw each chord inside the unit disk.

    Skeleton points sit counterclockwise at rational points of the unit
    circle (``rotation`` shifts which point hosts the first skeleton entry).
    A chord leaves its marked point radially, then runs straight to its own
    fan point close to its base point.
    """
    n = len(g.skeleton)
    if not g.chords:
        return []
    pts = [_circle_point(2 * math.pi * (((m + rotation) % n) + 0.37) / n) for m in range(n)]
    inset = Fraction(1, 12 * n)
    spread = Fraction(1, 24 * n)
    by_base: dict[int, list[OrientedChord]] = {}
    for ch in g.chords:
        by_base.setdefault(ch.base_end, []).append(ch)
    fan: dict[OrientedChord, Point2] = {}
    for base, chords in by_base.items():
        b = pts[base]
        tangent = Point2(-b.y, b.x)
        inner = b.scale(1 - inset)
        chords = sorted(chords, key=lambda ch: (ch.crossing_end - base) % n)
        m = len(chords)
        for r, ch in enumerate(chords):
            offset = spread * Fraction(m - 1 - 2 * r, max(m, 1))
            fan[ch] = inner + tangent.scale(offset)
    out = []
    for ch in g.chords:
        p = pts[ch.crossing_end]
        out.append(RealizedChord(ch, (p, p.scale(1 - inset / 3), fan[ch])))
    _check_realization(out)
    return out


def _crossings_between(a: RealizedChord, b: RealizedChord) -> list[tuple[Point2, int]]:
    hits = []
    for p0, p1 in a.segments():
        for q0, q1 in b.segments():
            hit = segment_intersection(p0, p1, q0, q1)
            if hit is not None:
                hits.append((hit[0], sign(cross(p1 - p0, q1 - q0))))
    return hits


def _check_realization(chords: Sequence[RealizedChord]) -> None:
    seen = set()
    for x in range(len(chords)):
        for y in range(x + 1, len(chords)):
            a, b = chords[x], chords[y]
            try:
                hits = _crossings_between(a, b)
            except Degenerate as exc:
                raise RealizationFailure(str(exc)) from exc
            if hits and a.chord.set_tag == b.chord.set_tag:
                raise RealizationFailure("two chords of the same set cross")
            for pos, _ in hits:
                if pos in seen:
                    raise RealizationFailure("three chords meet at one point")
                seen.add(pos)


def same_set_crossings(chords: Sequence[RealizedChord]) -> int:
    count = 0
    for x in range(len(chords)):
        for y in range(x + 1, len(chords)):
            if chords[x].chord.set_tag == chords[y].chord.set_tag:
                count += len(_crossings_between(chords[x], chords[y]))
    return count


def pairing_geometric(g: GeneralizedChordDiagram, rotation: int = 0) -> int:
    realized = realize_geometric(g, rotation)
    kj = [r for r in realized if r.chord.set_tag == "T_kj"]
    ki = [r for r in realized if r.chord.set_tag == "T_ki"]
    total = 0
    for q in kj:
        for p in ki:
            total += sum(s for _, s in _crossings_between(q, p))
    return KAPPA * total
