"""Both sides of the triple-linking congruence, and the L(D) identity.

The doodle side is ``-mu(C1, C2, C3)`` minus the three chord pairings
taken over the cyclic triples; the other side is the Magnus-expansion
value of mu-bar(123). They must agree modulo the gcd of the linking
numbers.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .chord import build_chord_diagram, pairing_combinatorial
from .doodle import Doodle, mu_invariant
from .linkdiagram import LinkDiagram, construct_L_of_D, gcd_modulus, linking_matrix, project_to_doodle
from .magnus import Residue, longitude_expansion, mu_bar_oracle

# (i, j, k) over the alternating group; term k is <O_{j x i}, G_{L_k}>.
CYCLIC_TRIPLES = ((2, 3, 1), (3, 1, 2), (1, 2, 3))


@dataclass
class CongruenceReport:
    lk: tuple
    delta: int
    mu: int
    pairings: dict
    rhs: int
    lhs: Residue
    verdict: bool
    lk_from_magnus: tuple = ()
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict

    def as_dict(self) -> dict:
        out = asdict(self)
        out["lhs"] = {"value": self.lhs.value, "modulus": self.lhs.modulus}
        out["pairings"] = {str(k): v for k, v in self.pairings.items()}
        out["verdict"] = "pass" if self.verdict else "fail"
        return out


def rhs_theorem(L: LinkDiagram, gap_choices: Optional[dict] = None) -> tuple[int, dict, int]:
    gap_choices = gap_choices or {}
    mu = mu_invariant(project_to_doodle(L))
    pairings = {}
    for i, j, k in CYCLIC_TRIPLES:
        g = build_chord_diagram(L, k, gap_choices.get(k))
        pairings[k] = pairing_combinatorial(g)
    return mu, pairings, -mu - sum(pairings.values())


def lk_from_magnus(L: LinkDiagram) -> tuple[int, int, int]:
    """(lk(1,2), lk(2,3), lk(3,1)) read off degree-1 longitude coefficients."""
    return (
        longitude_expansion(L, 2).coeff(1),
        longitude_expansion(L, 3).coeff(2),
        longitude_expansion(L, 1).coeff(3),
    )


def check_congruence(
    L: LinkDiagram,
    gap_choices: Optional[dict] = None,
    bases: Optional[Sequence[int]] = None,
    metadata: Optional[dict] = None,
) -> CongruenceReport:
    lk = linking_matrix(L)
    d = gcd_modulus(lk)
    mu, pairings, rhs = rhs_theorem(L, gap_choices)
    lhs = mu_bar_oracle(L, (1, 2, 3), bases)
    meta = dict(metadata or {})
    meta.setdefault("gap_choices", {str(k): v for k, v in (gap_choices or {}).items()})
    if bases:
        meta.setdefault("bases", list(bases))
    return CongruenceReport(lk, d, mu, pairings, rhs, lhs, lhs.congruent(rhs), lk_from_magnus(L), meta)


@dataclass
class LDReport:
    mu: int
    mu_bar: int
    delta: int
    pairings: dict
    verdict: bool


def verify_ld_theorem(d: Doodle) -> LDReport:
    """mu-bar(L(D))_123 = -mu(D) exactly, with every chord pairing of L(D) zero."""
    L = construct_L_of_D(d)
    mu = mu_invariant(d)
    lhs = mu_bar_oracle(L)
    _, pairings, _ = rhs_theorem(L)
    ok = lhs.modulus == 0 and lhs.value == -mu and not any(pairings.values())
    return LDReport(mu, lhs.value, lhs.modulus, pairings, ok)


def gap_count(L: LinkDiagram, k: int) -> int:
    """Number of distinct base-point gaps along component ``k``."""
    return max(1, len(build_chord_diagram(L, k).chords))


def rhs_residues_over_gaps(L: LinkDiagram, choices: int = 5) -> set:
    """RHS residues mod delta, moving the base gap of one component at a time
    through up to ``choices`` positions."""
    d = gcd_modulus(linking_matrix(L))
    out = set()
    for k in (1, 2, 3):
        count = gap_count(L, k)
        for n in range(min(choices, count)):
            _, _, rhs = rhs_theorem(L, {k: n})
            out.add(rhs % d if d else rhs)
    return out
