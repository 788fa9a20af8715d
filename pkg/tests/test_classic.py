import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruteforce import all_tournaments, is_strong_brute
from conftest import transitive
from cyclemill import (
    NotStrongError,
    build_tournament,
    cycle_of_length,
    cycle_through_vertex,
    extend_cycle,
    hamiltonian_cycle,
    hamiltonian_path,
    is_cycle,
    is_path,
)
from cyclemill.gen import random_tournament


class TestHamiltonianPath:
    def test_transitive_unique(self):
        assert hamiltonian_path(transitive(4)) == (0, 1, 2, 3)

    def test_triangle(self, triangle):
        path = hamiltonian_path(triangle)
        assert is_path(triangle, path) and len(path) == 3

    def test_paley_validated(self, paley7):
        path = hamiltonian_path(paley7)
        assert sorted(path) == list(range(7))
        assert is_path(paley7, path)

    def test_exhaustive_small(self):
        for n in (2, 3, 4, 5, 6):
            for t in all_tournaments(n):
                path = hamiltonian_path(t)
                assert sorted(path) == list(range(n))
                assert is_path(t, path)

    @given(st.integers(0, 2**32), st.integers(1, 64))
    @settings(max_examples=60, deadline=None)
    def test_randomized(self, seed, n):
        t = random_tournament(n, seed)
        path = hamiltonian_path(t)
        assert sorted(path) == list(range(n))
        assert is_path(t, path)


class TestHamiltonianCycle:
    def test_triangle(self, triangle):
        assert hamiltonian_cycle(triangle) == (0, 1, 2)

    def test_paley(self, paley7):
        cycle = hamiltonian_cycle(paley7)
        assert sorted(cycle) == list(range(7))
        assert is_cycle(paley7, cycle)

    def test_not_strong_names_split(self):
        with pytest.raises(NotStrongError, match=r"\[0\] dominates \[1, 2, 3\]"):
            hamiltonian_cycle(transitive(4))

    def test_exhaustive_strong_small(self):
        for n in (3, 4, 5):
            for t in all_tournaments(n):
                if is_strong_brute(t):
                    cycle = hamiltonian_cycle(t)
                    assert sorted(cycle) == list(range(n))
                    assert is_cycle(t, cycle)


class TestCycleOfLength:
    def test_triangle(self, triangle):
        assert cycle_of_length(triangle, 3) == (0, 1, 2)

    @pytest.mark.parametrize("length", [3, 4, 5, 6, 7])
    def test_paley_all_lengths(self, paley7, length):
        cycle = cycle_of_length(paley7, length)
        assert len(cycle) == length
        assert is_cycle(paley7, cycle)

    def test_range_errors(self, paley7):
        with pytest.raises(ValueError):
            cycle_of_length(paley7, 2)
        with pytest.raises(ValueError):
            cycle_of_length(paley7, 8)
        with pytest.raises(NotStrongError):
            cycle_of_length(transitive(5), 3)


class TestCycleThroughVertex:
    def test_triangle_vertex(self, triangle):
        cycle = cycle_through_vertex(triangle, 1, 3)
        assert 1 in cycle and is_cycle(triangle, cycle)

    def test_paley_v0_l5(self, paley7):
        cycle = cycle_through_vertex(paley7, 0, 5)
        assert 0 in cycle and len(cycle) == 5 and is_cycle(paley7, cycle)

    def test_paley_v6_l3(self, paley7):
        cycle = cycle_through_vertex(paley7, 6, 3)
        assert 6 in cycle and len(cycle) == 3 and is_cycle(paley7, cycle)

    def test_exact_rotation_on_triangle(self, triangle):
        assert cycle_through_vertex(triangle, 1, 3) == (1, 2, 0)

    def test_exhaustive_small(self):
        for n in (3, 4, 5):
            for t in all_tournaments(n):
                if not is_strong_brute(t):
                    continue
                for v in range(n):
                    for length in range(3, n + 1):
                        cycle = cycle_through_vertex(t, v, length)
                        assert v in cycle and len(cycle) == length
                        assert is_cycle(t, cycle)

    def test_randomized_n7(self):
        found = 0
        for seed in range(120):
            t = random_tournament(7, seed)
            if len(t.strong_components()) != 1:
                continue
            found += 1
            for v in range(7):
                for length in range(3, 8):
                    cycle = cycle_through_vertex(t, v, length)
                    assert v in cycle and len(cycle) == length and is_cycle(t, cycle)
        assert found > 50


class TestExtendCycle:
    def test_frozen_strong_t4(self):
        from itertools import permutations

        t = build_tournament(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (3, 2)])
        grown = extend_cycle(t, (0, 1, 2))
        assert grown == (0, 3, 1, 2)
        all_4_cycles = {
            (0,) + p for p in permutations((1, 2, 3)) if is_cycle(t, (0,) + p)
        }
        assert all_4_cycles == {(0, 3, 1, 2)}  # the extension is forced here

    def test_already_hamiltonian(self, triangle):
        with pytest.raises(ValueError, match="Hamiltonian"):
            extend_cycle(triangle, (0, 1, 2))

    def test_paley_triangle_keeps_vertices(self, paley7):
        grown = extend_cycle(paley7, (0, 1, 3))
        assert len(grown) == 4 and is_cycle(paley7, grown)
        assert {0, 1, 3} <= set(grown)

    def test_swap_when_no_mixed_vertex(self):
        # 3 dominates the triangle, the triangle dominates 4, and 4 beats 3:
        # no outside vertex has arcs both ways, so one triangle vertex is traded
        # for the pair (4, 3).
        arcs = [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (0, 4), (1, 4), (2, 4), (4, 3)]
        t = build_tournament(5, arcs)
        grown = extend_cycle(t, (0, 1, 2))
        assert grown == (2, 4, 3, 1)
        assert is_cycle(t, grown) and len(grown) == 4

    def test_growth_and_near_superset(self):
        for seed in range(40):
            t = random_tournament(9, seed)
            if len(t.strong_components()) != 1:
                continue
            cycle = cycle_of_length(t, 4)
            grown = extend_cycle(t, cycle)
            assert len(grown) == 5 and is_cycle(t, grown)
            assert len(set(cycle) - set(grown)) <= 1

    def test_deterministic(self, paley7):
        rebuilt = build_tournament(
            7, [(i, j) for i in range(7) for j in range(7) if i != j and paley7.arc(i, j)]
        )
        assert extend_cycle(paley7, (0, 1, 3)) == extend_cycle(rebuilt, (0, 1, 3))
