import networkx as nx
import pytest

from constructions.examples import gen_example7
from graphs.multipartite import BLUE, RED, TwoColoring, build_host
from hamiltonicity.bipartite import (
    BalancedBipartite, Certification, berge_certifier, chvatal_certifier,
    hamiltonian_cycle, hamiltonian_cycle_through, hamiltonian_path_between,
    has_q_edge_extension, is_hamiltonian_biconnected, las_vergnas_certifier, linear_forests,
)
from finders.witness import validate_witness
from utils.robust_utils import HostError, SearchCapExceeded, SearchError

from conftest import random_bipartite


def complete(m):
    return BalancedBipartite.from_edges(m, [(i, j) for i in range(m) for j in range(m)])


def minus_perfect_matching(m):
    return BalancedBipartite.from_edges(m, [(i, j) for i in range(m) for j in range(m) if i != j])


def cycle6():
    return BalancedBipartite.from_edges(3, [(i, i) for i in range(3)] + [(i, (i + 1) % 3) for i in range(3)])


class TestBalancedBipartite:

    def test_degrees_sorted_with_ties_by_index(self):
        H = BalancedBipartite.from_edges(3, [(2, 0), (2, 1), (0, 0)])
        assert H.u_order == (1, 0, 2)
        assert H.sorted_u_degrees() == [0, 1, 2]
        assert H.sorted_v_degrees() == [0, 1, 2]

    def test_from_color_subgraph(self):
        c = TwoColoring.uniform(build_host([3, 3]), RED)
        H = BalancedBipartite.from_color_subgraph(c, RED)
        assert H == complete(3)
        assert BalancedBipartite.from_color_subgraph(c, BLUE).edges() == []

    def test_unbalanced_host(self):
        c = TwoColoring.uniform(build_host([3, 2]), RED)
        with pytest.raises(HostError):
            BalancedBipartite.from_color_subgraph(c, RED)

    def test_with_edge(self):
        H = BalancedBipartite.from_edges(2, []).with_edge(1, 0)
        assert H.has_edge(1, 0) and not H.has_edge(0, 1)

    def test_certification_truthiness(self):
        assert Certification.GUARANTEED
        assert not Certification.UNKNOWN


class TestChvatal:

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_complete(self, m):
        assert chvatal_certifier(complete(m)) is Certification.GUARANTEED

    def test_cycle6(self):
        H = cycle6()
        assert chvatal_certifier(H)
        assert hamiltonian_cycle(H) is not None

    def test_isolated_vertex(self):
        H = BalancedBipartite.from_edges(3, [(i, j) for i in range(1, 3) for j in range(3)])
        assert chvatal_certifier(H) is Certification.UNKNOWN

    def test_m1_rejected(self):
        with pytest.raises(HostError):
            chvatal_certifier(complete(1))


class TestBerge:

    def test_k44_minus_matching(self):
        H = minus_perfect_matching(4)
        assert berge_certifier(H)
        assert is_hamiltonian_biconnected(H)

    def test_k22(self):
        H = complete(2)
        assert berge_certifier(H)
        assert hamiltonian_path_between(H, 0, 2) is not None

    def test_k33_minus_matching(self):
        assert berge_certifier(minus_perfect_matching(3)) is Certification.UNKNOWN


class TestLasVergnas:

    @pytest.mark.parametrize("q", [0, 1, 2, 3])
    def test_complete(self, q):
        assert las_vergnas_certifier(complete(4), q)

    def test_cycle6_q0(self):
        assert las_vergnas_certifier(cycle6(), 0)

    def test_k44_minus_matching_q1(self):
        H = minus_perfect_matching(4)
        assert las_vergnas_certifier(H, 1)
        assert has_q_edge_extension(H, 1)

    @pytest.mark.parametrize("q", [-1, 3])
    def test_q_out_of_range(self, q):
        with pytest.raises(SearchError):
            las_vergnas_certifier(complete(3), q)


class TestHamiltonianCycleThrough:

    def test_k33_one_required_edge(self):
        H = complete(3)
        witness = hamiltonian_cycle_through(H, [(0, 3)])
        assert witness is not None
        cycle = witness.vertices
        assert validate_witness(H.to_networkx(), witness)
        k = cycle.index(0)
        assert 3 in (cycle[k - 1], cycle[(k + 1) % len(cycle)])

    def test_cycle6_adjacent_required_edges(self):
        witness = hamiltonian_cycle_through(cycle6(), [(0, 3), (0, 4)])
        assert witness is not None and len(witness.vertices) == 6

    def test_example7_blue_path_gluing_impossible(self):
        inst = gen_example7(3)
        sets = inst.named_sets
        y = sets['y'][0]
        z1, z2 = sets['C']
        nodes = (y,) + sets['C'] + sets['B'] + sets['v_1']
        g = inst.coloring.subgraph(BLUE).to_networkx().subgraph(nodes)
        assert hamiltonian_cycle_through(g, [(y, z1), (y, z2)]) is None

    def test_required_edges_must_be_paths(self):
        H = complete(3)
        with pytest.raises(SearchError):
            hamiltonian_cycle_through(H, [(0, 3), (0, 4), (0, 5)])

    def test_required_edge_must_exist(self):
        with pytest.raises(SearchError):
            hamiltonian_cycle_through(cycle6(), [(0, 5)])

    def test_cap(self):
        with pytest.raises(SearchCapExceeded):
            hamiltonian_cycle_through(nx.cycle_graph(30), [])

    def test_path_between_opens_cycle(self):
        witness = hamiltonian_path_between(complete(3), 0, 4)
        assert witness.vertices[0] == 0 and witness.vertices[-1] == 4
        assert validate_witness(complete(3).to_networkx(), witness)
        assert len(witness.vertices) == 6

    def test_path_between_same_side_impossible(self):
        assert hamiltonian_path_between(complete(3), 0, 1) is None


class TestLinearForests:

    def test_cycle6_two_edges(self):
        forests = list(linear_forests(cycle6(), 2))
        # every pair of the six cycle edges is a linear forest
        assert len(forests) == 15

    def test_star_excluded(self):
        forests = list(linear_forests(nx.star_graph(3), 3))
        assert forests == []


class TestSoundness:

    @pytest.mark.slow
    def test_random_graphs(self, rng):
        checked = {'chvatal': 0, 'berge': 0, 'lasvergnas': 0}
        for trial in range(1000):
            m = int(rng.integers(2, 8))
            H = random_bipartite(rng, m, float(rng.uniform(0.4, 1.0)))
            if chvatal_certifier(H):
                checked['chvatal'] += 1
                assert hamiltonian_cycle(H) is not None, (trial, H)
            if berge_certifier(H):
                checked['berge'] += 1
                assert is_hamiltonian_biconnected(H), (trial, H)
            q = int(rng.integers(0, min(m - 1, 2 if m <= 5 else 1) + 1))
            if las_vergnas_certifier(H, q):
                checked['lasvergnas'] += 1
                assert has_q_edge_extension(H, q), (trial, H, q)
        assert all(count > 0 for count in checked.values())


class TestDegreeProperties:

    def test_order_independence(self, rng):
        for _ in range(200):
            m = int(rng.integers(2, 7))
            H = random_bipartite(rng, m, 0.6)
            pu, pv = rng.permutation(m), rng.permutation(m)
            G = BalancedBipartite.from_edges(m, [(int(pu[i]), int(pv[j])) for i, j in H.edges()])
            assert chvatal_certifier(G) == chvatal_certifier(H)
            assert berge_certifier(G) == berge_certifier(H)

    def test_monotone_under_edge_addition(self, rng):
        for _ in range(200):
            m = int(rng.integers(2, 7))
            H = random_bipartite(rng, m, float(rng.uniform(0.5, 0.9)))
            missing = [(i, j) for i in range(m) for j in range(m) if not H.has_edge(i, j)]
            for i, j in missing:
                bigger = H.with_edge(i, j)
                if chvatal_certifier(H):
                    assert chvatal_certifier(bigger)
                if berge_certifier(H):
                    assert berge_certifier(bigger)

    def test_las_vergnas_monotone_under_edge_addition(self, rng):
        for _ in range(300):
            m = int(rng.integers(2, 6))
            H = random_bipartite(rng, m, float(rng.uniform(0.4, 0.9)))
            q = int(rng.integers(0, m))
            if not las_vergnas_certifier(H, q):
                continue
            for i in range(m):
                for j in range(m):
                    if not H.has_edge(i, j):
                        assert las_vergnas_certifier(H.with_edge(i, j), q), (H, i, j, q)
