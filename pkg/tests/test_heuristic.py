import pytest

from constructions.examples import gen_example6
from finders.mono import mono_search
from finders.paths import iter_paths, longest_path_order
from frontier.enumeration import enumerate_verify
from frontier.heuristic import coloring_energy, counterexample_search
from graphs.multipartite import BLUE, RED, TwoColoring, build_host

from conftest import random_coloring


class TestColoringEnergy:

    def test_single_color_k22(self):
        c = TwoColoring.uniform(build_host([2, 2]), BLUE)
        assert coloring_energy(c, 'path', 3) == 4
        assert coloring_energy(c, 'cycle', 4) == 1
        assert coloring_energy(c, 'cycle-min', 3) == 1

    def test_example6_is_zero(self):
        assert coloring_energy(gen_example6(2).coloring, 'path', 5) == 0

    def test_count_limit(self):
        c = TwoColoring.uniform(build_host([3, 3]), RED)
        assert coloring_energy(c, 'path', 3, limit=5) == 5

    def test_matching_excess(self):
        c = TwoColoring.uniform(build_host([3, 3]), RED)
        assert coloring_energy(c, 'cmatching', 2) == 2

    @pytest.mark.parametrize("target,size", [('path', 4), ('cycle', 4), ('cycle-min', 5), ('cmatching', 2)])
    def test_zero_exactly_when_absent(self, rng, target, size):
        for _ in range(150):
            host = build_host([int(x) for x in rng.integers(1, 4, size=int(rng.integers(2, 4)))])
            c = random_coloring(rng, host)
            assert (coloring_energy(c, target, size) == 0) == (mono_search(c, target, size) is None)

    def test_iter_paths_counts_each_path_once(self):
        c = TwoColoring.uniform(build_host([2, 2]), RED)
        paths = list(iter_paths(c.subgraph(RED), 4))
        assert len(paths) == 4
        assert all(p[0] < p[-1] for p in paths)


class TestCounterexampleSearch:

    def test_k22_p3(self):
        coloring = counterexample_search([2, 2], 'path', 3, budget=500, seed=1)
        assert coloring is not None
        assert mono_search(coloring, 'path', 3) is None

    def test_k33_p5(self):
        coloring = counterexample_search(build_host([3, 3]), 'path', 5, budget=2000, seed=0)
        assert coloring is not None
        assert mono_search(coloring, 'path', 5) is None

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_k44_p5_finds_split_pattern(self, seed):
        coloring = counterexample_search([4, 4], 'path', 5, budget=3000, seed=seed)
        assert coloring is not None
        assert mono_search(coloring, 'path', 5) is None
        assert max(longest_path_order(coloring.subgraph(color)) for color in (RED, BLUE)) == 4

    def test_k43_c4_agrees_with_enumeration(self):
        # below the asymptotic range K_{2n,2n-1} still admits colorings without a mono C_2n
        summary = enumerate_verify([4, 3], 'cycle', 4)
        coloring = counterexample_search([4, 3], 'cycle', 4, budget=3000, seed=0)
        assert not summary.holds
        assert coloring is not None
        assert mono_search(coloring, 'cycle', 4) is None

    def test_zero_budget(self):
        assert counterexample_search([3, 3], 'path', 4, budget=0) is None

    def test_impossible_target_exhausts_budget(self):
        # every coloring of K_{3,3} has a mono P_4
        assert counterexample_search([3, 3], 'path', 4, budget=60, seed=2) is None

    def test_deterministic_for_seed(self):
        a = counterexample_search([3, 3], 'path', 5, budget=2000, seed=7)
        b = counterexample_search([3, 3], 'path', 5, budget=2000, seed=7)
        assert a == b
