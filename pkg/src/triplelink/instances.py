"""Fixtures and seeded generators of doodles and link diagrams."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .doodle import Doodle, InvalidDoodle
from .geometry import Degenerate, Point2, Polyline, point
from .linkdiagram import LinkDiagram


class GenerationExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    components: int = 3
    vertices: tuple = (5, 9)
    bound: int = 1000
    max_attempts: int = 500
    # chance that a component winds twice around its centre and so crosses itself
    double_turn: float = 0.3


def _rational_on_circle(theta: float, denominator: int = 10**4) -> Point2:
    t = Fraction(math.tan(theta / 2)).limit_denominator(denominator)
    d = 1 + t * t
    return Point2((1 - t * t) / d, 2 * t / d)


def rational_circle(center, radius, n: int = 24, phase: float = 0.1) -> Polyline:
    """Counterclockwise n-gon with rational vertices on a circle."""
    cx, cy = Fraction(center[0]), Fraction(center[1])
    r = Fraction(radius)
    verts = []
    for m in range(n):
        p = _rational_on_circle(phase + 2 * math.pi * m / n)
        verts.append(Point2(cx + r * p.x, cy + r * p.y))
    return Polyline(tuple(verts))


def venn_doodle() -> Doodle:
    """Three anticlockwise circles in Venn position (the Borromean projection)."""
    centers = [(0, Fraction(7, 5)), (Fraction(-6, 5), Fraction(-7, 10)), (Fraction(6, 5), Fraction(-7, 10))]
    return Doodle([rational_circle(c, 2, 24, 0.1 + 0.05 * n) for n, c in enumerate(centers)])


def disjoint_circles() -> Doodle:
    return Doodle([rational_circle((6 * n, 0), 2, 12) for n in range(3)])


def _star_curve(rng: random.Random, p: GenParams) -> Polyline:
    lo, hi = p.vertices
    m = rng.randint(lo, hi)
    turns = 2 if rng.random() < p.double_turn else 1
    if turns == 2:
        m = max(m, 5)
    b = p.bound
    cx = rng.randint(-b // 4, b // 4)
    cy = rng.randint(-b // 4, b // 4)
    radius = rng.randint(b // 4, b // 2)
    angles = sorted(rng.uniform(0, 2 * math.pi * turns) for _ in range(m))
    verts = []
    for a in angles:
        r = radius * rng.uniform(0.35, 1.0)
        verts.append(point(cx + round(r * math.cos(a)), cy + round(r * math.sin(a))))
    if rng.random() < 0.5:
        verts.reverse()
    return Polyline(tuple(verts))


def random_doodle(p: GenParams) -> Doodle:
    rng = random.Random(p.seed)
    for _ in range(p.max_attempts):
        try:
            return Doodle([_star_curve(rng, p) for _ in range(p.components)])
        except Degenerate:
            continue
    raise GenerationExhausted(f"no general-position doodle after {p.max_attempts} attempts (seed {p.seed})")


def random_link(p: GenParams) -> LinkDiagram:
    d = random_doodle(p)
    rng = random.Random(f"over-bits/{p.seed}")
    return LinkDiagram.from_rule(d.components, lambda a, b, cp: rng.choice("ab"), validate=False)


_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37))


def perturb_isotopy(
    d: Doodle,
    p: GenParams,
    subdivide: bool = True,
    rotate: bool = True,
    translate: bool = True,
    scale: bool = True,
) -> Doodle:
    """Move ``d`` by an orientation-preserving similarity and subdivide edges.

    Rotations use Pythagorean-triple angles so coordinates stay rational.
    """
    rng = random.Random(f"isotopy/{p.seed}")
    a, b, c = rng.choice(_TRIPLES)
    if rng.random() < 0.5:
        a, b = b, a
    cos, sin = Fraction(a, c) * rng.choice((1, -1)), Fraction(b, c) * rng.choice((1, -1))
    if not rotate:
        cos, sin = Fraction(1), Fraction(0)
    s = Fraction(rng.randint(1, 40), rng.randint(1, 40)) if scale else Fraction(1)
    tx = Fraction(rng.randint(-500, 500), rng.randint(1, 9)) if translate else Fraction(0)
    ty = Fraction(rng.randint(-500, 500), rng.randint(1, 9)) if translate else Fraction(0)

    def move(v: Point2) -> Point2:
        return Point2(s * (cos * v.x - sin * v.y) + tx, s * (sin * v.x + cos * v.y) + ty)

    for _ in range(p.max_attempts):
        comps = []
        for curve in d.components:
            verts = []
            for seg, v0, v1 in curve.segments():
                verts.append(v0)
                if subdivide and rng.random() < 0.5:
                    t = Fraction(rng.randint(1, 96), 97)
                    verts.append(v0 + (v1 - v0).scale(t))
            comps.append(Polyline(tuple(move(v) for v in verts)))
        try:
            return Doodle(comps)
        except InvalidDoodle:
            continue
    raise GenerationExhausted("could not subdivide without touching a crossing")


def forbidden_move_fixture() -> tuple[Doodle, Doodle]:
    """Two doodles that differ by one forbidden triangle move.

    Component 1 has a dent; moving the dent's tip from x = 2 to x = -2
    pushes that strand across the crossing of components 2 and 3 at the
    origin, while every crossing outside the disk |x| < 3 stays put.
    """

    def build(tip: int) -> Doodle:
        c1 = Polyline(((3, -6), (12, -6), (12, 6), (3, 6), (tip, 0)))
        c2 = Polyline(((-6, -3), (6, 3), (8, 11), (-14, 9)))
        c3 = Polyline(((-6, 3), (6, -3), (9, -12), (-13, -10)))
        return Doodle([c1, c2, c3])

    return build(2), build(-2)


def with_seed(p: GenParams, seed: int) -> GenParams:
    return replace(p, seed=seed)
