import random

import pytest

from bruteforce import all_tournaments, dfs_has_q_cycle, is_strong_brute
from cyclemill import (
    absorb,
    build_tournament,
    fact1_shrink,
    fact2_shrink,
    fact3_double_shrink,
    fact4_low_vertex,
    hamiltonian_cycle,
    is_cycle,
    splice_and_trim,
)
from cyclemill.claims import random_strong_tournament
from cyclemill.core import mask_of
from cyclemill.gen import random_tournament


def arcs_into(t, v, vertices):
    return (t.out_mask(v) & mask_of(vertices)).bit_count()


T4 = build_tournament(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


class TestFact1:
    def test_frozen_t4(self):
        shorter, u = fact1_shrink(T4, (0, 1, 2, 3))
        assert (shorter, u) == ((0, 1, 3), 2)
        # brute force: the only admissible answer drops vertex 2
        for drop in range(4):
            keep = [v for v in range(4) if v != drop]
            sub, label = T4.induced(keep)
            if len(sub.strong_components()) == 1 and arcs_into(T4, drop, range(4)) <= 1:
                assert drop == 2

    def test_paley_bound(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        shorter, u = fact1_shrink(paley7, cycle)
        assert is_cycle(paley7, shorter) and len(shorter) == 6
        assert set(shorter) | {u} == set(cycle)
        assert arcs_into(paley7, u, cycle) <= 4

    def test_too_short(self, triangle):
        with pytest.raises(ValueError):
            fact1_shrink(triangle, (0, 1, 2))


class TestFact2:
    def test_paley_bound(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        shorter, u = fact2_shrink(paley7, cycle)
        assert is_cycle(paley7, shorter) and len(shorter) == 6
        assert arcs_into(paley7, u, cycle) <= 3

    def test_length_6_rejected(self):
        t = random_strong_tournament(6, 3)
        with pytest.raises(ValueError):
            fact2_shrink(t, hamiltonian_cycle(t))

    def test_random_strong_9(self):
        t = random_strong_tournament(9, 17)
        cycle = hamiltonian_cycle(t)
        shorter, u = fact2_shrink(t, cycle)
        assert is_cycle(t, shorter)
        assert set(shorter) | {u} == set(cycle)
        assert arcs_into(t, u, cycle) <= 5

    def test_balanced_split_falls_through_to_second_chain(self):
        # found by search: the leftover's two dominators split the 6-cycle into
        # 2+2 and the first chain dead-ends, so the walk crosses to the other
        # side (which domination then forces to qualify immediately)
        from cyclemill.core import Tournament

        t = Tournament((80, 9, 75, 1, 46, 15, 58))
        cycle = hamiltonian_cycle(t)
        shorter, u = fact2_shrink(t, cycle)
        assert (shorter, u) == ((2, 6, 3, 0, 4, 5), 1)
        assert arcs_into(t, u, cycle) <= 3 and is_cycle(t, shorter)


class TestFact3:
    def test_paley(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        shorter, (x, y) = fact3_double_shrink(paley7, cycle)
        assert is_cycle(paley7, shorter) and len(shorter) == 5
        assert {x, y} == set(cycle) - set(shorter)
        assert paley7.arc(x, y)
        assert arcs_into(paley7, y, cycle) <= 3

    def test_length_6_rejected(self):
        t = random_strong_tournament(6, 3)
        with pytest.raises(ValueError):
            fact3_double_shrink(t, hamiltonian_cycle(t))

    def test_random_strong_11(self):
        t = random_strong_tournament(11, 29)
        cycle = hamiltonian_cycle(t)
        shorter, (x, y) = fact3_double_shrink(t, cycle)
        assert is_cycle(t, shorter) and len(shorter) == 9
        assert t.arc(x, y) and arcs_into(t, y, cycle) <= 7


class TestShrinkSuite:
    """Randomized degree-bound sweep; the heavy version runs in acceptance."""

    def test_bounds_hold(self):
        rng = random.Random(5)
        for trial in range(300):
            n = 7 + trial % 3
            t = random_strong_tournament(n, rng.getrandbits(32))
            cycle = hamiltonian_cycle(t)
            s1, u1 = fact1_shrink(t, cycle)
            assert arcs_into(t, u1, cycle) <= n - 3 and is_cycle(t, s1)
            s2, u2 = fact2_shrink(t, cycle)
            assert arcs_into(t, u2, cycle) <= n - 4 and is_cycle(t, s2)
            s3, (x, y) = fact3_double_shrink(t, cycle)
            assert t.arc(x, y) and arcs_into(t, y, cycle) <= n - 4 and is_cycle(t, s3)

    def test_deterministic(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        assert fact2_shrink(paley7, cycle) == fact2_shrink(paley7, cycle)


class TestFact4:
    def test_qualifying_vertex(self):
        v = fact4_low_vertex(T4, (0, 1, 2, 3), (0, 1, 2))
        assert v in (0, 1, 2)
        assert arcs_into(T4, v, (0, 1, 2, 3)) <= 1

    def test_first_in_given_order(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        v = fact4_low_vertex(paley7, cycle, cycle[:3])
        first_ok = next(u for u in cycle[:3] if arcs_into(paley7, u, cycle) <= 4)
        assert v == first_ok

    def test_exhaustive_small(self):
        from itertools import combinations

        for n in (4, 5):
            for t in all_tournaments(n):
                if not is_strong_brute(t):
                    continue
                cycle = hamiltonian_cycle(t)
                for trio in combinations(range(n), 3):
                    v = fact4_low_vertex(t, cycle, trio)
                    assert v in trio and arcs_into(t, v, cycle) <= n - 3

    def test_randomized_6_7(self):
        rng = random.Random(9)
        for trial in range(400):
            n = 6 + trial % 2
            t = random_strong_tournament(n, rng.getrandbits(32))
            cycle = hamiltonian_cycle(t)
            trio = rng.sample(cycle, 3)
            v = fact4_low_vertex(t, cycle, trio)
            assert v in trio and arcs_into(t, v, cycle) <= n - 3

    def test_triangle_rejected(self, triangle):
        with pytest.raises(ValueError):
            fact4_low_vertex(triangle, (0, 1, 2), (0, 1, 2))


class TestAbsorb:
    def test_paley_triangle(self, paley7):
        grown = absorb(paley7, (0, 1, 3), 2)
        assert grown == (0, 1, 2, 3)
        assert is_cycle(paley7, grown)

    def test_length_and_membership(self, paley7):
        for u in (2, 4, 5):  # 6 dominates the triangle and is tested below
            grown = absorb(paley7, (0, 1, 3), u)
            assert len(grown) == 4 and u in grown and is_cycle(paley7, grown)
        with pytest.raises(ValueError, match="dominates"):
            absorb(paley7, (0, 1, 3), 6)

    def test_dominating_rejected(self):
        t = build_tournament(4, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)])
        with pytest.raises(ValueError, match="dominates"):
            absorb(t, (0, 1, 2), 3)

    def test_dominated_rejected(self):
        t = build_tournament(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
        with pytest.raises(ValueError, match="dominated"):
            absorb(t, (0, 1, 2), 3)


class TestSpliceAndTrim:
    def test_exact_length_unchanged(self, paley7):
        # 0 -> 1 -> 3 -> 0 assembled as exit=0, segment=(1,), entry=3
        assert splice_and_trim(paley7, 3, (1,), 0, 3) == (0, 1, 3)

    def test_trims_to_target(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        entry, exit_vertex = cycle[-1], cycle[0]
        trimmed = splice_and_trim(paley7, entry, cycle[1:-1], exit_vertex, 3)
        assert len(trimmed) == 3 and is_cycle(paley7, trimmed)
        assert set(trimmed) <= set(cycle)

    def test_missing_closing_arc(self, paley7):
        with pytest.raises(ValueError, match="closing arc"):
            splice_and_trim(paley7, 2, (1,), 0, 3)  # needs arc 2 -> 0, absent

    def test_missing_segment_arc(self, paley7):
        with pytest.raises(ValueError, match="segment arc"):
            splice_and_trim(paley7, 0, (1,), 3, 3)  # needs arc 3 -> 1, absent

    def test_too_short(self, paley7):
        with pytest.raises(ValueError, match="vertices"):
            splice_and_trim(paley7, 3, (1,), 0, 4)

    def test_planted_q3_verified_by_search(self):
        # assemble a 5-cycle in a random strong tournament, trim to a triangle
        from cyclemill import cycle_of_length

        t = random_strong_tournament(9, 77)
        five = cycle_of_length(t, 5)
        trimmed = splice_and_trim(t, five[-1], five[1:-1], five[0], 3)
        assert is_cycle(t, trimmed) and set(trimmed) <= set(five)
        sub, _ = t.induced(five)
        assert dfs_has_q_cycle(sub, 3)
