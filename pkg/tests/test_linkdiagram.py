import pytest

from triplelink.geometry import Point2, Polyline, cross
from triplelink.instances import GenParams, disjoint_circles, random_doodle, random_link, rational_circle, venn_doodle
from triplelink.linkdiagram import (
    DiagramError,
    LinkDiagram,
    construct_L_of_D,
    cyclic_indices,
    delta,
    gcd_modulus,
    linking_matrix,
    linking_number,
    over_crossing_sets,
    project_to_doodle,
)
from triplelink.geometry import validate_general_position


def hopf_with_spectator(over_rule):
    a = Polyline(((0, 0), (4, 0), (4, 4), (0, 4)))
    b = Polyline(((2, 2), (7, 2), (7, 7), (2, 7)))
    far = rational_circle((30, 30), 2, 8)
    return LinkDiagram.from_rule([a, b, far], over_rule)


def test_cyclic_indices():
    assert [cyclic_indices(k) for k in (1, 2, 3)] == [(2, 3), (3, 1), (1, 2)]


class TestProjection:
    def test_round_trip_venn(self):
        d = venn_doodle()
        assert project_to_doodle(construct_L_of_D(d)).components == d.components

    def test_positions_kept(self):
        L = random_link(GenParams(seed=1))
        d = project_to_doodle(L)
        assert d.components == L.components
        assert validate_general_position(d.components).ok


class TestLinking:
    def test_split(self):
        L = construct_L_of_D(disjoint_circles())
        assert linking_matrix(L) == (0, 0, 0)

    def test_hopf(self):
        # component 1 over at its first crossing, under at the second
        seen = []

        def rule(a, b, cp):
            seen.append(cp)
            return "a" if len(seen) == 1 else "b"

        # by hand: at (4, 2) a runs up over b running right, det((0,4),(5,0)) < 0;
        # at (2, 4) b runs down over a running left, det((0,-5),(-4,0)) < 0
        L = hopf_with_spectator(rule)
        assert [c.geometry.position for c in L.crossings] == [Point2(4, 2), Point2(2, 4)]
        assert [c.gamma for c in L.crossings] == [-1, -1]
        assert linking_number(L, 1, 2) == -1

    def test_hopf_positive(self):
        a = Polyline(((0, 0), (4, 0), (4, 4), (0, 4)))
        b = Polyline(((2, 2), (7, 2), (7, 7), (2, 7))).reversed()
        L = LinkDiagram.from_rule(
            [a, b, rational_circle((30, 30), 2, 8)], lambda a_, b_, cp: "a" if cp.seg_a == 1 else "b"
        )
        assert [c.gamma for c in L.crossings] == [1, 1]
        assert linking_number(L, 1, 2) == 1

    def test_symmetric(self, link_corpus):
        for L in link_corpus[:30]:
            for i, j in [(1, 2), (2, 3), (1, 3)]:
                assert linking_number(L, i, j) == linking_number(L, j, i)

    def test_over_only_sum_equals_lk(self, link_corpus):
        for L in link_corpus[:30]:
            for i, j in [(1, 2), (2, 3), (1, 3)]:
                over_i = sum(c.gamma for c in L.crossings if (c.over_component, c.under_component) == (i, j))
                assert over_i == linking_number(L, i, j)

    def test_gamma_recomputes(self, link_corpus):
        for L in link_corpus[:30]:
            for c in L.crossings:
                da = L[c.comp_a].direction(c.geometry.seg_a)
                db = L[c.comp_b].direction(c.geometry.seg_b)
                over, under = (da, db) if c.over == "a" else (db, da)
                assert c.gamma == (1 if cross(over, under) > 0 else -1)

    def test_rigid_motion(self):
        L = random_link(GenParams(seed=7))

        def move(v):
            return Point2(-v.y + 3, v.x - 11)

        bits = {c.key: c.over for c in L.crossings}
        moved = LinkDiagram.from_over_bits([c.map(move) for c in L.components], bits)
        assert linking_matrix(moved) == linking_matrix(L)

    def test_same_component_rejected(self):
        with pytest.raises(ValueError):
            linking_number(construct_L_of_D(venn_doodle()), 2, 2)


class TestDelta:
    @pytest.mark.parametrize("lk,expected", [((2, -2, 2), 2), ((0, 0, 0), 0), ((3, 5, 0), 1)])
    def test_gcd(self, lk, expected):
        assert gcd_modulus(lk) == expected

    def test_L_of_D_unlinked(self):
        for seed in range(20):
            L = construct_L_of_D(random_doodle(GenParams(seed=seed)))
            assert linking_matrix(L) == (0, 0, 0)
            assert delta(L) == 0


class TestLofD:
    def test_cyclic_rule(self):
        L = construct_L_of_D(venn_doodle())
        for c in L.crossings:
            assert (c.over_component, c.under_component) in {(1, 2), (2, 3), (3, 1)}

    def test_disjoint(self):
        L = construct_L_of_D(disjoint_circles())
        assert L.crossings == ()


class TestOverSets:
    def test_L_of_D_component_1(self):
        L = construct_L_of_D(venn_doodle())
        sets = over_crossing_sets(L, 1)
        assert sets.V_kj == [] and len(sets.V_ki) == 2  # (i, j) = (2, 3)

    def test_split(self):
        sets = over_crossing_sets(construct_L_of_D(disjoint_circles()), 2)
        assert sets.sequence == ()

    def test_direct_scan(self, link_corpus):
        for L in link_corpus[:50]:
            for k in (1, 2, 3):
                sets = over_crossing_sets(L, k)
                direct = [c for c in L.crossings if not c.is_self and c.over_component == k]
                assert len(sets.V_ki) + len(sets.V_kj) == len(direct)
                assert {s[0] for s in sets.sequence} == {L.crossings.index(c) for c in direct}

    def test_traversal_order(self, link_corpus):
        L = link_corpus[5]
        for k in (1, 2, 3):
            seq = over_crossing_sets(L, k).sequence
            positions = [L.crossings[idx].over_position for idx, _, _ in seq]
            assert positions == sorted(positions)


class TestOverBits:
    def test_missing_key(self):
        d = venn_doodle()
        L = construct_L_of_D(d)
        bits = {c.key: c.over for c in L.crossings}
        bits.pop(next(iter(bits)))
        with pytest.raises(DiagramError):
            LinkDiagram.from_over_bits(d.components, bits)

    def test_extra_key(self):
        d = venn_doodle()
        bits = {c.key: c.over for c in construct_L_of_D(d).crossings}
        bits[(1, 0, 2, 0)] = "a"
        with pytest.raises(DiagramError):
            LinkDiagram.from_over_bits(d.components, bits)
