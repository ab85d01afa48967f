import logging

import pytest

from finders.mono import mono_search
from finders.paths import longest_path_order
from frontier.enumeration import EnumerationOptions, enumerate_verify, frontier_rows, group_order
from graphs.multipartite import BLUE, RED, TwoColoring, build_host, components
from utils.robust_utils import EnumerationCapExceeded, SearchError


class TestPathsInBalancedBipartite:
    """Every 2-coloring of K_{n,n} has a mono P_{2*ceil(n/2)}, and some coloring avoids one vertex more."""

    def test_k33_p4_always_present(self):
        summary = enumerate_verify([3, 3], 'path', 4)
        assert summary.colorings == 512
        assert summary.failures == 0
        assert summary.counterexample is None
        assert summary.holds

    def test_k33_p5_can_be_avoided(self):
        summary = enumerate_verify([3, 3], 'path', 5)
        assert summary.failures >= 1
        assert mono_search(summary.counterexample, 'path', 5) is None
        assert summary.counterexample.to_mask() == summary.counterexample_index

    def test_k33_p5_first_counterexample(self):
        # blue is the 4-cycle on {0,1} x {3,4}; red is a double star spanning all six vertices
        coloring = enumerate_verify([3, 3], 'path', 5).counterexample
        assert coloring.to_mask() == 27
        assert sorted(coloring.edges_of(BLUE)) == [(0, 3), (0, 4), (1, 3), (1, 4)]
        assert components(coloring.subgraph(RED)) == [frozenset(range(6))]
        assert longest_path_order(coloring.subgraph(RED)) == 4
        assert longest_path_order(coloring.subgraph(BLUE)) == 4

    @pytest.mark.slow
    def test_k44(self):
        present = enumerate_verify([4, 4], 'path', 4)
        assert present.colorings == 65536
        assert present.failures == 0
        avoided = enumerate_verify([4, 4], 'path', 5)
        assert avoided.failures >= 1
        assert mono_search(avoided.counterexample, 'path', 5) is None


class TestRanges:

    def test_split_ranges_add_up(self):
        whole = enumerate_verify([3, 3], 'path', 5)
        low = enumerate_verify([3, 3], 'path', 5, EnumerationOptions(start=0, end=256))
        high = enumerate_verify([3, 3], 'path', 5, EnumerationOptions(start=256, end=512))
        assert low.colorings + high.colorings == whole.colorings
        assert low.failures + high.failures == whole.failures

    def test_range_outside_host(self):
        with pytest.raises(SearchError):
            enumerate_verify([2, 2], 'path', 3, EnumerationOptions(start=0, end=17))

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_verify([3, 3], 'path', 4, EnumerationOptions(max_colorings=100))

    def test_chunking_does_not_change_counts(self):
        a = enumerate_verify([2, 2, 1], 'cycle', 4, EnumerationOptions(chunks_per_worker=1))
        b = enumerate_verify([2, 2, 1], 'cycle', 4, EnumerationOptions(chunks_per_worker=7))
        assert (a.colorings, a.failures, a.counterexample_index) == \
            (b.colorings, b.failures, b.counterexample_index)


class TestSymmetry:

    @pytest.mark.parametrize("parts,target,size", [
        ([2, 2], 'path', 3), ([2, 2, 1], 'cycle', 4), ([3, 3], 'path', 5), ([2, 2, 1], 'cmatching', 2),
    ])
    @pytest.mark.parametrize("mode", ['color', 'full'])
    def test_reduced_counts_match_unreduced(self, parts, target, size, mode):
        plain = enumerate_verify(parts, target, size)
        reduced = enumerate_verify(parts, target, size, EnumerationOptions(symmetry=mode))
        assert reduced.colorings == plain.colorings
        assert reduced.failures == plain.failures
        assert reduced.representatives < plain.representatives

    def test_color_swap_metamorphic(self):
        host = build_host([2, 2, 1])
        full = (1 << host.edge_count) - 1
        failing = {m for m in range(full + 1)
                   if mono_search(TwoColoring.from_mask(host, m), 'cycle', 4) is None}
        assert {m ^ full for m in failing} == failing

    def test_symmetry_needs_full_range(self):
        with pytest.raises(SearchError):
            enumerate_verify([2, 2], 'path', 3, EnumerationOptions(end=8, symmetry='color'))

    def test_group_cap(self):
        assert group_order(build_host([4, 4])) == 1152
        with pytest.raises(EnumerationCapExceeded):
            enumerate_verify([3, 3], 'path', 4, EnumerationOptions(symmetry='full', max_group_order=10))

    def test_unknown_mode(self):
        with pytest.raises(SearchError):
            enumerate_verify([2, 2], 'path', 3, EnumerationOptions(symmetry='graph'))


class TestParallel:

    @pytest.mark.slow
    @pytest.mark.parametrize("parts,target,size", [([2, 2, 2], 'path', 5), ([4, 3], 'cycle', 4)])
    def test_serial_and_parallel_agree(self, parts, target, size):
        serial = enumerate_verify(parts, target, size, EnumerationOptions(workers=1))
        parallel = enumerate_verify(parts, target, size, EnumerationOptions(workers=4))
        assert serial.colorings == parallel.colorings == 4096
        assert serial.failures == parallel.failures
        assert serial.counterexample_index == parallel.counterexample_index


class TestReporting:

    def test_summary_dict_has_timestamp(self):
        data = enumerate_verify([2, 2], 'path', 3).to_dict()
        assert set(data['timestamp']) == {'finished_at', 'wall_time_s'}
        assert data['target'] == 'P_3'
        assert data['colorings'] == 16

    def test_frontier_rows(self):
        summary = enumerate_verify([2, 2], 'path', 3)
        rows = frontier_rows([summary], {0: 'w.json'})
        assert rows == [{
            'parts': '2,2', 'n': 1, 'target': 'P_3', 'colorings': 16,
            'failures': summary.failures, 'witness-file': 'w.json',
        }]

    def test_frontier_rows_matching_n_is_edge_count(self):
        summary = enumerate_verify([2, 2, 1], 'cmatching', 2)
        rows = frontier_rows([summary])
        assert rows[0]['n'] == 2
        assert rows[0]['target'] == 'M_2'

    def test_each_chunk_is_logged(self, caplog):
        options = EnumerationOptions(workers=1, chunks_per_worker=2)
        with caplog.at_level(logging.INFO, logger='ramsey_workbench'):
            enumerate_verify([2, 2], 'path', 3, options)
        chunks = [r.getMessage() for r in caplog.records if r.getMessage().startswith('Chunk [')]
        assert chunks == [
            'Chunk [0, 8) of K_{2,2}: 8 colorings, 1 without P_3, 8 searched',
            'Chunk [8, 16) of K_{2,2}: 8 colorings, 1 without P_3, 8 searched',
        ]
