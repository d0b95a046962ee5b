"""Degree-2 Magnus expansion of Wirtinger longitudes, and signed letter
occurrences in words.

The longitude of component ``k`` is read as a product of over-arc
meridians; its image in the integer power series ring in three
noncommuting variables, truncated above degree 2, carries the linking
numbers (degree 1) and the triple linking number (the ``x_i x_j``
coefficient, well defined modulo the gcd of the linking numbers).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .linkdiagram import LinkDiagram, delta

VARS = (1, 2, 3)


class NotInvertible(ArithmeticError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    """``c0 + sum lin[a] x_a + sum quad[a][b] x_a x_b`` with a, b in 1..3."""

    c0: int = 1
    lin: tuple = (0, 0, 0)
    quad: tuple = ((0, 0, 0), (0, 0, 0), (0, 0, 0))

    @classmethod
    def one(cls) -> "TruncatedSeries":
        return cls()

    @classmethod
    def generator(cls, a: int) -> "TruncatedSeries":
        lin = [0, 0, 0]
        lin[a - 1] = 1
        return cls(1, tuple(lin))

    def coeff(self, *word: int) -> int:
        if not word:
            return self.c0
        if len(word) == 1:
            return self.lin[word[0] - 1]
        if len(word) == 2:
            return self.quad[word[0] - 1][word[1] - 1]
        return 0

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __pow__(self, n: int) -> "TruncatedSeries":
        base = self if n >= 0 else series_inv(self)
        out = TruncatedSeries.one()
        for _ in range(abs(n)):
            out = series_mul(out, base)
        return out

    def __str__(self) -> str:
        terms = [str(self.c0)] if self.c0 else []
        for a in VARS:
            if self.lin[a - 1]:
                terms.append(f"{self.lin[a - 1]:+d}*x{a}")
        for a in VARS:
            for b in VARS:
                if self.quad[a - 1][b - 1]:
                    terms.append(f"{self.quad[a - 1][b - 1]:+d}*x{a}x{b}")
        return " ".join(terms) or "0"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    lin = tuple(a.c0 * b.lin[r] + a.lin[r] * b.c0 for r in range(3))
    quad = tuple(
        tuple(
            a.c0 * b.quad[r][s] + a.quad[r][s] * b.c0 + a.lin[r] * b.lin[s]
            for s in range(3)
        )
        for r in range(3)
    )
    return TruncatedSeries(a.c0 * b.c0, lin, quad)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term 1: ``1 - L - Q + L^2``."""
    if a.c0 != 1:
        raise NotInvertible(f"constant term {a.c0} is not 1")
    lin = tuple(-v for v in a.lin)
    quad = tuple(
        tuple(-a.quad[r][s] + a.lin[r] * a.lin[s] for s in range(3)) for r in range(3)
    )
    return TruncatedSeries(1, lin, quad)


def commutator_term(u: Sequence[int], v: Sequence[int]) -> tuple:
    """Quadratic coefficients of ``U V - V U`` for linear forms U, V."""
    return tuple(tuple(u[r] * v[s] - v[r] * u[s] for s in range(3)) for r in range(3))


# ---------------------------------------------------------------------------
# Words and signed occurrences


@dataclass(frozen=True)
class SignedWord:
    letters: tuple = ()

    def __init__(self, letters: Iterable = ()):
        object.__setattr__(self, "letters", tuple((s, int(e)) for s, e in letters))
        for _, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")

    def __add__(self, other: "SignedWord") -> "SignedWord":
        return SignedWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def signed_count(self, r) -> int:
        return sum(e for s, e in self.letters if s == r)


def signed_occurrence(w: SignedWord, r, s) -> int:
    """Sum of eps_i * eps_j over positions i < j holding r and s respectively."""
    total = 0
    seen_r = 0
    for sym, eps in w.letters:
        if sym == s:
            total += seen_r * eps
        if sym == r:
            seen_r += eps
    return total


def m_from_words(w1: SignedWord, w2: SignedWord, w3: SignedWord) -> int:
    """e_23(w1) + e_31(w2) + e_12(w3)."""
    for k, w in ((1, w1), (2, w2), (3, w3)):
        bad = {s for s, _ in w.letters if s == k or s not in VARS}
        if bad:
            raise ValueError(f"word {k} may only use the other two components, found {sorted(bad)}")
    return signed_occurrence(w1, 2, 3) + signed_occurrence(w2, 3, 1) + signed_occurrence(w3, 1, 2)


# ---------------------------------------------------------------------------
# Wirtinger arcs and longitudes


@dataclass(frozen=True)
class Arc:
    component: int
    index: int
    span: tuple  # (start, end) as (segment, parameter) positions; start None for the base arc
    expansion: TruncatedSeries


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"

    def congruent(self, v: int) -> bool:
        if self.modulus == 0:
            return self.value == v
        return (v - self.value) % self.modulus == 0


def _walk(L: LinkDiagram, k: int, base: int = 0) -> list[tuple]:
    """Events along component ``k`` starting just after under-crossing ``base - 1``.

    ``base = 0`` starts at vertex 0; larger values start after the
    corresponding under-passage (taken cyclically).
    """
    events = L.events(k)
    unders = [n for n, e in enumerate(events) if not e[2]]
    if base == 0 or not unders:
        return events
    cut = unders[(base - 1) % len(unders)] + 1
    return events[cut:] + events[:cut]


def _arc_table(L: LinkDiagram, bases: Optional[Sequence[int]] = None):
    """For each crossing, the Magnus expansion of the over-arc passing through it.

    Walking along component c, the arc reached after the partial longitude
    ``w`` carries the meridian ``w^-1 x_c w``, whose expansion is
    ``1 + x_c + x_c W - W x_c`` with W the linear part of ``w``.
    """
    bases = bases or (0, 0, 0)
    over_arc = {}
    arcs = []
    for c in range(1, len(L) + 1):
        unit = [0, 0, 0]
        unit[c - 1] = 1
        w = [0, 0, 0]
        start = None
        index = 0

        def current():
            return TruncatedSeries(1, tuple(unit), commutator_term(unit, w))

        for pos, idx, is_over in _walk(L, c, bases[c - 1]):
            if is_over:
                over_arc[idx] = current()
                continue
            cr = L.crossings[idx]
            arcs.append(Arc(c, index, (start, pos), current()))
            index += 1
            start = pos
            w[cr.over_component - 1] += cr.gamma
        arcs.append(Arc(c, index, (start, None), current()))
    return over_arc, arcs


def arc_expansions(L: LinkDiagram, bases: Optional[Sequence[int]] = None) -> list[Arc]:
    return _arc_table(L, bases)[1]


def longitude_expansion(L: LinkDiagram, k: int, bases: Optional[Sequence[int]] = None) -> TruncatedSeries:
    over_arc, _ = _arc_table(L, bases)
    b = (bases or (0, 0, 0))[k - 1]
    out = TruncatedSeries.one()
    for _, idx, is_over in _walk(L, k, b):
        if is_over:
            continue
        cr = L.crossings[idx]
        g = over_arc[idx]
        out = series_mul(out, g if cr.gamma > 0 else series_inv(g))
    return out


def mu_bar_oracle(
    L: LinkDiagram, order: Sequence[int] = (1, 2, 3), bases: Optional[Sequence[int]] = None
) -> Residue:
    """Triple linking number mu-bar(ijk): the x_i x_j coefficient of the k-th longitude."""
    i, j, k = order
    if sorted(order) != [1, 2, 3]:
        raise ValueError(f"order must be a permutation of (1, 2, 3), got {order}")
    lam = longitude_expansion(L, k, bases)
    return Residue(lam.coeff(i, j), delta(L))
