"""Doodles, oriented smoothing of self-crossings, and the mu-invariant."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .geometry import (
    Degenerate,
    Polyline,
    curve_intersections,
    orientation_flag,
    self_intersections,
    validate_general_position,
    winding_number,
)


class InvalidDoodle(Degenerate):
    def __init__(self, report):
        self.report = report
        first = report.violations[0]
        super().__init__(
            f"{len(report.violations)} general-position violation(s); first: "
            f"{first.kind} at ({first.location.x}, {first.location.y}) {first.detail}"
        )


@dataclass(frozen=True)
class Doodle:
    components: tuple

    def __init__(self, components: Sequence[Polyline], validate: bool = True):
        comps = tuple(c if isinstance(c, Polyline) else Polyline(tuple(c)) for c in components)
        object.__setattr__(self, "components", comps)
        if validate:
            report = validate_general_position(comps)
            if not report.ok:
                raise InvalidDoodle(report)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, k: int) -> Polyline:
        """Component ``k``, counted from 1."""
        if not 1 <= k <= len(self.components):
            raise IndexError(f"component index {k} out of range")
        return self.components[k - 1]

    def reverse(self, *ks: int) -> "Doodle":
        comps = [c.reversed() if i in ks else c for i, c in enumerate(self.components, start=1)]
        return Doodle(comps, validate=False)

    def map(self, f) -> "Doodle":
        return Doodle([c.map(f) for c in self.components], validate=False)


@dataclass(frozen=True)
class SmoothedFamily:
    source_component_index: int
    curves: tuple
    orientation_flags: tuple


def _strand_events(curve: Polyline):
    crossings = self_intersections(curve)
    events = []
    for m, c in enumerate(crossings):
        events.append((c.seg_a, c.t, m, c.position))
        events.append((c.seg_b, c.u, m, c.position))
    events.sort(key=lambda e: (e[0], e[1]))
    return crossings, events


def smoothing_cycles(curve: Polyline) -> list[list[int]]:
    """Cycles of strand indices produced by smoothing every double point.

    Strand ``r`` runs from event ``r`` to event ``r + 1`` along the curve; at a
    double point the strand arriving on one branch leaves on the other.
    """
    _, events = _strand_events(curve)
    if not events:
        return []
    partner = {}
    by_crossing: dict[int, list[int]] = {}
    for r, e in enumerate(events):
        by_crossing.setdefault(e[2], []).append(r)
    for a, b in by_crossing.values():
        partner[a], partner[b] = b, a
    count = len(events)
    seen = [False] * count
    cycles = []
    for start in range(count):
        if seen[start]:
            continue
        cyc = []
        r = start
        while not seen[r]:
            seen[r] = True
            cyc.append(r)
            r = partner[(r + 1) % count]
        cycles.append(cyc)
    return cycles


def smooth_curve(curve: Polyline) -> list[Polyline]:
    _, events = _strand_events(curve)
    if not events:
        return [curve]
    n = len(curve)
    count = len(events)
    strands = []
    for r in range(count):
        seg0, t0, _, pos0 = events[r]
        seg1, t1, _, _ = events[(r + 1) % count]
        path = [pos0]
        if seg1 == seg0 and t1 > t0:
            strands.append(path)
            continue
        s = seg0
        while True:
            s = (s + 1) % n
            path.append(curve.vertices[s])
            if s == seg1:
                break
        strands.append(path)
    out = []
    for cyc in smoothing_cycles(curve):
        verts = []
        for r in cyc:
            verts.extend(strands[r])
        out.append(Polyline(tuple(verts)))
    return out


def smooth_component(d: Doodle, k: int) -> SmoothedFamily:
    curves = tuple(smooth_curve(d[k]))
    return SmoothedFamily(k, curves, tuple(orientation_flag(c) for c in curves))


def mu_invariant(d: Doodle, sigma: Sequence[int] = (1, 2, 3)) -> int:
    """mu(C_s1, C_s2, C_s3) for the permutation ``sigma`` of (1, 2, 3).

    Each crossing of the second and third curves contributes its sign,
    corrected by the orientation of every smoothed piece of the first curve
    that encloses it.
    """
    if sorted(sigma) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1, 2, 3): {sigma}")
    a, b, c = (d[s] for s in sigma)
    family = smooth_curve(a)
    flags = [orientation_flag(piece) for piece in family]
    total = 0
    for p in curve_intersections(b, c):
        for piece, flag in zip(family, flags):
            if winding_number(p.position, piece) != 0:
                total += -p.epsilon if flag else p.epsilon
    return total


def permutation_sign(sigma: Sequence[int]) -> int:
    s = 1
    sigma = list(sigma)
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                s = -s
    return s


def mu_all_permutations(d: Doodle) -> dict[tuple, int]:
    return {sigma: mu_invariant(d, sigma) for sigma in permutations((1, 2, 3))}
