"""Three-component link diagrams: crossings with over/under data, linking
numbers, the gcd modulus, and the cyclic-height link L(D) of a doodle."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional, Sequence

from .doodle import Doodle
from .geometry import CrossingPoint, Polyline, curve_intersections, self_intersections


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    geometry: CrossingPoint
    comp_a: int
    comp_b: int
    over: str
    gamma: int

    @property
    def key(self) -> tuple:
        return (self.comp_a, self.geometry.seg_a, self.comp_b, self.geometry.seg_b)

    @property
    def over_component(self) -> int:
        return self.comp_a if self.over == "a" else self.comp_b

    @property
    def under_component(self) -> int:
        return self.comp_b if self.over == "a" else self.comp_a

    @property
    def is_self(self) -> bool:
        return self.comp_a == self.comp_b

    def position_on(self, branch: str) -> tuple:
        g = self.geometry
        return (g.seg_a, g.t) if branch == "a" else (g.seg_b, g.u)

    @property
    def over_position(self) -> tuple:
        return self.position_on(self.over)

    @property
    def under_position(self) -> tuple:
        return self.position_on("b" if self.over == "a" else "a")


def crossing_sign(geometry: CrossingPoint, over: str) -> int:
    """Right-handed sign: +1 iff det(over direction, under direction) > 0."""
    return geometry.epsilon if over == "a" else -geometry.epsilon


def geometric_crossings(components: Sequence[Polyline]) -> list[tuple[int, int, CrossingPoint]]:
    """Every crossing as ``(comp_a, comp_b, geometry)`` in canonical key order."""
    out = []
    n = len(components)
    for a in range(1, n + 1):
        for cp in self_intersections(components[a - 1]):
            out.append((a, a, cp))
        for b in range(a + 1, n + 1):
            for cp in curve_intersections(components[a - 1], components[b - 1]):
                out.append((a, b, cp))
    out.sort(key=lambda r: (r[0], r[2].seg_a, r[2].t, r[1], r[2].seg_b))
    return out


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple
    crossings: tuple

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, k: int) -> Polyline:
        return self.components[k - 1]

    @classmethod
    def from_rule(
        cls, components: Sequence[Polyline], rule: Callable[[int, int, CrossingPoint], str], validate: bool = True
    ) -> "LinkDiagram":
        """Build a diagram, asking ``rule(comp_a, comp_b, geometry)`` for each over bit."""
        if validate:
            Doodle(components)
        components = tuple(components)
        crossings = []
        for a, b, cp in geometric_crossings(components):
            over = rule(a, b, cp)
            if over not in ("a", "b"):
                raise DiagramError(f"over bit must be 'a' or 'b', got {over!r}")
            crossings.append(Crossing(cp, a, b, over, crossing_sign(cp, over)))
        return cls(components, tuple(crossings))

    @classmethod
    def from_over_bits(cls, components: Sequence[Polyline], bits: dict) -> "LinkDiagram":
        """Build from ``{(comp_a, seg_a, comp_b, seg_b): 'a' | 'b'}``; keys must match exactly."""
        components = tuple(components)
        Doodle(components)
        found = {(a, cp.seg_a, b, cp.seg_b) for a, b, cp in geometric_crossings(components)}
        missing = sorted(found - set(bits))
        extra = sorted(set(bits) - found)
        if missing:
            raise DiagramError(f"no over/under data for crossing {missing[0]}")
        if extra:
            raise DiagramError(f"crossing key {extra[0]} matches no geometric crossing")
        return cls.from_rule(components, lambda a, b, cp: bits[(a, cp.seg_a, b, cp.seg_b)], validate=False)

    def with_over(self, index: int, over: str) -> "LinkDiagram":
        crossings = list(self.crossings)
        c = crossings[index]
        crossings[index] = Crossing(c.geometry, c.comp_a, c.comp_b, over, crossing_sign(c.geometry, over))
        return LinkDiagram(self.components, tuple(crossings))

    def events(self, k: int) -> list[tuple]:
        """Crossing passages along component ``k`` as ``(position, crossing index, is_over)``.

        Self-crossings appear twice. Order is traversal order from vertex 0.
        """
        out = []
        for idx, c in enumerate(self.crossings):
            if c.comp_a == k:
                out.append((c.position_on("a"), idx, c.over == "a"))
            if c.comp_b == k:
                out.append((c.position_on("b"), idx, c.over == "b"))
        out.sort(key=lambda e: e[0])
        return out


def project_to_doodle(L: LinkDiagram) -> Doodle:
    return Doodle(L.components, validate=False)


def linking_number(L: LinkDiagram, i: int, j: int) -> int:
    if i == j:
        raise ValueError("linking number needs two distinct components")
    total = sum(c.gamma for c in L.crossings if {c.comp_a, c.comp_b} == {i, j})
    if total % 2:
        raise DiagramError(f"odd crossing-sign sum {total} between components {i} and {j}")
    return total // 2


def linking_matrix(L: LinkDiagram) -> tuple[int, int, int]:
    """(lk(1,2), lk(2,3), lk(3,1))."""
    return linking_number(L, 1, 2), linking_number(L, 2, 3), linking_number(L, 3, 1)


def gcd_modulus(values: Sequence[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


def delta(L: LinkDiagram) -> int:
    """gcd of the pairwise linking numbers; 0 when all of them vanish."""
    return gcd_modulus(linking_matrix(L))


# C1 over C2, C2 over C3, C3 over C1.
_CYCLIC_OVER = {(1, 2): 1, (2, 3): 2, (1, 3): 3}


def construct_L_of_D(d: Doodle) -> LinkDiagram:
    if len(d) != 3:
        raise ValueError("L(D) needs a 3-component doodle")

    def rule(a, b, cp):
        if a == b:
            return "a"
        return "a" if _CYCLIC_OVER[(a, b)] == a else "b"

    return LinkDiagram.from_rule(d.components, rule, validate=False)


@dataclass(frozen=True)
class OverSets:
    """Over-crossings of component ``k``, split by the under-component.

    ``sequence`` holds every inter-component over-crossing of ``k`` in
    traversal order as ``(crossing index, under component, gamma)``.
    """

    k: int
    i: int
    j: int
    sequence: tuple

    @property
    def V_ki(self) -> list:
        return [s for s in self.sequence if s[1] == self.i]

    @property
    def V_kj(self) -> list:
        return [s for s in self.sequence if s[1] == self.j]


def cyclic_indices(k: int) -> tuple[int, int]:
    """(i, j) such that (i, j, k) is a cyclic permutation of (1, 2, 3)."""
    return k % 3 + 1, (k + 1) % 3 + 1


def over_crossing_sets(L: LinkDiagram, k: int) -> OverSets:
    i, j = cyclic_indices(k)
    seq = []
    for _, idx, is_over in L.events(k):
        c = L.crossings[idx]
        if is_over and not c.is_self:
            seq.append((idx, c.under_component, c.gamma))
    return OverSets(k, i, j, tuple(seq))
