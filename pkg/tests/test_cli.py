import json

import pytest

from cli import main
from graphs.multipartite import BLUE, RED, TwoColoring, build_host
from serialization.instance_file import InstanceFile, read_instance_file, write_instance_file
from serialization.reports import read_frontier_csv


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def k33_red(tmp_path):
    host = build_host([3, 3])
    path = tmp_path / 'k33.json'
    write_instance_file(path, InstanceFile(host, TwoColoring.uniform(host, RED)))
    return path


class TestGenerateAndCheck:

    def test_example7_has_no_mono_c6(self, capsys, tmp_path):
        path = tmp_path / 'ex7.json'
        code, report = run_json(capsys, 'generate', '--example', 7, '--n', 3, '-o', path)
        assert code == 0
        assert report['host'] == 'K_{5,3,1,1}'
        code, report = run_json(capsys, 'check', path, '--target', 'cycle', '--size', 6)
        assert code == 1
        assert report['found'] is False

    def test_check_finds_structure(self, capsys, k33_red):
        code, report = run_json(capsys, 'check', k33_red, '--target', 'cycle', '--size', 6)
        assert code == 0
        assert report['color'] == 'red'
        assert len(report['witness']['vertices']) == 6

    def test_generate_is_deterministic(self, capsys, tmp_path):
        for name in ('a.json', 'b.json'):
            run(capsys, 'generate', '--example', 4, '--n', 3, '--encoding', 'edges', '-o', tmp_path / name)
        assert (tmp_path / 'a.json').read_text() == (tmp_path / 'b.json').read_text()

    def test_example1_needs_parts(self, capsys, tmp_path):
        assert main(['generate', '--example', '1', '--n', '3', '-o', str(tmp_path / 'x.json')]) == 2
        assert 'WorkbenchError' in capsys.readouterr().err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"format_version": 1, "part_sizes": [2, 2], "coloring": {"encoding": "bitstring", "bits": "01"}}')
        assert main(['check', str(path), '--target', 'path', '--size', '3']) == 2
        assert '"error_code": "length_mismatch"' in capsys.readouterr().err


class TestCertify:

    def test_generated_certificates_are_valid(self, capsys, tmp_path):
        path = tmp_path / 'ex6.json'
        run(capsys, 'generate', '--example', 6, '--n', 3, '-o', path)
        code, report = run_json(capsys, 'certify', path)
        assert code == 0
        assert report['all_valid']
        assert all(claim['certified'] for claim in report['claimed_absences'])

    def test_planted_bad_certificate(self, capsys, tmp_path):
        path = tmp_path / 'planted.json'
        path.write_text(json.dumps({
            'format_version': 1, 'part_sizes': [2, 2],
            'coloring': {'encoding': 'bitstring', 'bits': '0000'},
            'certificates': [{'type': 'component_bound', 'color': 1, 'bound': 3}],
        }))
        code, report = run_json(capsys, 'certify', path)
        assert code == 1
        assert report['certificates'][0]['valid'] is False


class TestHam:

    def test_complete_bipartite_red(self, capsys, k33_red):
        code, report = run_json(capsys, 'ham', k33_red, '--theorem', 'chvatal', '--search')
        assert code == 0
        assert report['verdict'] == 'guaranteed'
        assert len(report['hamiltonian_cycle']) == 6

    def test_empty_blue(self, capsys, k33_red):
        code, report = run_json(capsys, 'ham', k33_red, '--theorem', 'berge', '--color', BLUE)
        assert code == 1
        assert report['verdict'] == 'unknown'

    def test_q_out_of_range(self, capsys, k33_red):
        assert main(['ham', str(k33_red), '--theorem', 'lasvergnas', '--q', '5']) == 2

    def test_unbalanced_host(self, capsys, tmp_path):
        host = build_host([3, 2])
        path = tmp_path / 'k32.json'
        write_instance_file(path, InstanceFile(host, TwoColoring.uniform(host, RED)))
        assert main(['ham', str(path), '--theorem', 'chvatal']) == 2


class TestConditions:

    def test_boundary_row_applies(self, capsys):
        code, report = run_json(capsys, 'conditions', '--n', 5, '--parts', '10,9', '--target', 'C_2n')
        assert code == 0
        assert report['applicable']['C_2n'] is True

    def test_failing_condition(self, capsys):
        code, report = run_json(capsys, 'conditions', '--n', 3, '--parts', '4,4,1,1', '--target', 'C_2n')
        assert code == 1
        assert 7 in report['failing']['C_2n']


class TestVerify:

    def test_k33_p4(self, capsys):
        code, report = run_json(capsys, 'verify', '--parts', '3,3', '--target', 'path', '--size', 4)
        assert code == 0
        assert report['colorings'] == 512
        assert report['failures'] == 0

    def test_counterexample_outputs(self, capsys, tmp_path):
        csv, witness, pdf = tmp_path / 'frontier.csv', tmp_path / 'w.json', tmp_path / 'report.pdf'
        code, report = run_json(capsys, 'verify', '--parts', '3,3', '--target', 'path', '--size', 5,
                                '--csv', csv, '--witness', witness, '--pdf', pdf)
        assert code == 1
        assert report['failures'] > 0
        frame = read_frontier_csv(csv)
        assert frame.loc[0, 'target'] == 'P_5'
        assert frame.loc[0, 'witness-file'] == str(witness)
        assert read_instance_file(witness).coloring.to_bitstring() == report['counterexample_bits']
        assert pdf.exists() and pdf.stat().st_size > 0

    def test_output_is_deterministic_apart_from_timestamp(self, capsys):
        argv = ('verify', '--parts', '2,2,1', '--target', 'cycle', '--size', 4, '--symmetry', 'full')
        _, first = run_json(capsys, *argv)
        _, second = run_json(capsys, *argv)
        first.pop('timestamp')
        second.pop('timestamp')
        assert first == second

    def test_range(self, capsys):
        code, report = run_json(capsys, 'verify', '--parts', '2,2', '--target', 'path', '--size', 3,
                                '--range', '0..8')
        assert report['colorings'] == 8

    def test_cap_exceeded(self, capsys):
        assert main(['verify', '--parts', '3,3', '--target', 'path', '--size', '4', '--max-colorings', '10']) == 3

    def test_search_cap_exceeded(self, capsys):
        assert main(['verify', '--parts', '2,2', '--target', 'path', '--size', '3', '--cap', '2']) == 3


class TestUsage:

    @pytest.mark.parametrize("argv", [
        [],
        ['verify', '--parts', '3,3'],
        ['verify', '--parts', 'a,b', '--target', 'path', '--size', '4'],
        ['verify', '--parts', '3,3', '--target', 'path', '--size', '4', '--range', '5'],
        ['generate', '--example', '9', '--n', '2', '-o', 'x.json'],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2


class TestSearchAndDot:

    def test_search_finds_counterexample(self, capsys, tmp_path):
        out = tmp_path / 'found.json'
        code, report = run_json(capsys, 'search', '--parts', '2,2', '--target', 'path', '--size', 3,
                                '--budget', 500, '--seed', 1, '-o', out)
        assert code == 1
        assert report['found_counterexample']
        assert read_instance_file(out).coloring.to_bitstring() == report['bits']

    def test_export_dot(self, capsys, tmp_path, k33_red):
        out = tmp_path / 'k33.dot'
        assert main(['export-dot', str(k33_red), '-o', str(out)]) == 0
        text = out.read_text()
        assert text.startswith('graph coloring {')
        assert text.count('[color=red]') == 9

    def test_export_dot_stdout(self, capsys, k33_red):
        code, out = run(capsys, 'export-dot', k33_red)
        assert code == 0
        assert '  0 -- 3 [color=red];' in out
