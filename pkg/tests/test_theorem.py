import pytest

from triplelink.instances import GenParams, disjoint_circles, random_link, venn_doodle
from triplelink.linkdiagram import construct_L_of_D
from triplelink.magnus import Residue
from triplelink.theorem import (
    CYCLIC_TRIPLES,
    check_congruence,
    gap_count,
    rhs_residues_over_gaps,
    rhs_theorem,
    verify_ld_theorem,
)


def test_cyclic_triples():
    for i, j, k in CYCLIC_TRIPLES:
        assert (i, j, k) in {(1, 2, 3), (2, 3, 1), (3, 1, 2)}
    assert sorted(k for _, _, k in CYCLIC_TRIPLES) == [1, 2, 3]


def test_unlink():
    rep = check_congruence(construct_L_of_D(disjoint_circles()))
    assert rep.verdict
    assert rep.lk == (0, 0, 0) and rep.delta == 0
    assert rep.mu == 0 and rep.rhs == 0 and rep.lhs == Residue(0, 0)


def test_borromean():
    rep = check_congruence(construct_L_of_D(venn_doodle()))
    assert rep.verdict
    assert rep.delta == 0 and rep.mu == 1
    assert rep.pairings == {1: 0, 2: 0, 3: 0}
    assert rep.lhs.value == -1


def test_arithmetic_shape():
    # lk = (2, -2, 2), mu = 2, pairings (-3, -1, -1): -2 + 5 = 3, which is 1 mod 2
    rhs = -2 - (-3 - 1 - 1)
    assert Residue(rhs, 2) == Residue(1, 2)
    assert Residue(1, 2).congruent(rhs)


def test_report_dict():
    rep = check_congruence(random_link(GenParams(seed=5)), metadata={"seed": 5})
    d = rep.as_dict()
    assert d["verdict"] in ("pass", "fail")
    assert set(d["pairings"]) == {"1", "2", "3"}
    assert d["metadata"]["seed"] == 5


def test_ld_pairings_vanish(doodle_corpus):
    for d in doodle_corpus[:50]:
        rep = verify_ld_theorem(d)
        assert rep.verdict, rep
        assert rep.delta == 0 and rep.mu_bar == -rep.mu


def test_ld_rhs_is_minus_mu(doodle_corpus):
    for d in doodle_corpus[:20]:
        mu, pairings, rhs = rhs_theorem(construct_L_of_D(d))
        assert rhs == -mu


@pytest.mark.parametrize("seed", range(0, 200, 10))
def test_congruence_sample(seed):
    assert check_congruence(random_link(GenParams(seed=seed))).verdict


def test_gap_invariance(link_corpus):
    for L in link_corpus[:30]:
        assert len(rhs_residues_over_gaps(L)) == 1


def test_explicit_gaps_agree(link_corpus):
    L = link_corpus[7]
    base = check_congruence(L)
    for k in (1, 2, 3):
        for g in range(gap_count(L, k)):
            rep = check_congruence(L, {k: g})
            assert rep.verdict
            assert rep.lhs == base.lhs
