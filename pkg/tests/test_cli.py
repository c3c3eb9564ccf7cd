"""
Command-line front-end: subcommands, output formats and exit codes.
"""

import io
import math

import msgspec
import pytest

from kostant_bounds.adapters.inbound.cli import build_parser, run
from kostant_bounds.config.constants import SWEEP_COLUMNS


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestParser:
    def test_subcommands(self):
        _, commands = build_parser()
        assert set(commands) == {'count', 'bound', 'capacity', 'vertices', 'asymptotic', 'sweep', 'check'}

    def test_parse_error(self):
        code, stdout, _ = invoke('count', '--method', 'guess')
        assert code == 2
        assert stdout == ''

    def test_missing_subcommand(self):
        assert invoke()[0] == 2


class TestCount:
    def test_netflow(self):
        code, stdout, _ = invoke('count', '--netflow', '1,1,1,-3')
        assert code == 0
        assert stdout == '{"K":"7"}\n'

    def test_family(self):
        _, stdout, _ = invoke('count', '--family', 'cry', '--t', '1', '--n', '6')
        assert msgspec.json.decode(stdout) == {'K': '32'}

    @pytest.mark.parametrize('method', ['lidskii', 'brute'])
    def test_methods_agree(self, method):
        _, stdout, _ = invoke('count', '--netflow', '2,0,0,0,-2', '--method', method)
        assert msgspec.json.decode(stdout) == {'K': '35'}

    def test_lidskii_terms_csv(self, tmp_path):
        path = tmp_path / 'terms.csv'
        code, stdout, _ = invoke('count', '--netflow', '1,0,0,-1', '--method', 'lidskii', '--out', str(path))
        assert code == 0
        assert stdout == ''
        assert path.read_text().splitlines() == ['composition,binomial,kostant,term', '3 0 0,1,1,1', '2 1 0,3,1,3']

    def test_bad_netflow(self):
        code, stdout, stderr = invoke('count', '--netflow', '1,1,-3')
        assert code == 2
        assert stdout == ''
        payload = msgspec.json.decode(stderr)
        assert payload['type'] == 'NonZeroSumError'
        assert payload['message']

    def test_empty_polytope(self):
        code, _, stderr = invoke('count', '--netflow', '1,-2,1')
        assert code == 2
        assert msgspec.json.decode(stderr)['type'] == 'EmptyPolytopeError'

    def test_both_sources(self):
        code, _, stderr = invoke('count', '--netflow', '1,-1', '--family', 'tesler', '--n', '2')
        assert code == 2
        assert msgspec.json.decode(stderr)['type'] == 'BadParamsError'

    def test_family_needs_n(self):
        assert invoke('count', '--family', 'tesler')[0] == 2


class TestBound:
    def test_average(self):
        code, stdout, _ = invoke('bound', '--netflow', '1,1,1,-3')
        report = msgspec.json.decode(stdout)
        assert code == 0
        assert report['method'] == 'entropy_at_flow'
        assert report['certified'] is True
        assert report['log_lower'] <= math.log(7)

    def test_optimizer(self):
        _, stdout, _ = invoke('bound', '--family', 'tesler', '--n', '4', '--flow', 'optimizer')
        report = msgspec.json.decode(stdout)
        assert report['method'] == 'entropy_opt'
        assert report['log_lower'] <= math.log(40) <= report['log_upper'] + 1e-6

    def test_midpoint(self):
        _, stdout, _ = invoke('bound', '--family', 'two_rho', '--n', '3', '--flow', 'midpoint')
        report = msgspec.json.decode(stdout)
        assert report['method'] == 'entropy_at_flow'
        assert report['certified'] is True

    def test_deterministic(self):
        first = invoke('bound', '--netflow', '2,1,3,-6')[1]
        assert first == invoke('bound', '--netflow', '2,1,3,-6')[1]


class TestCapacity:
    def test_document_and_trace(self, tmp_path):
        trace = tmp_path / 'trace.csv'
        code, stdout, _ = invoke('capacity', '--netflow', '1,1,1,-3', '--trace', str(trace))
        document = msgspec.json.decode(stdout)
        assert code == 0
        assert {'capacity_log', 'entropy', 'gap', 'flow', 'point', 'sweeps'} <= set(document)
        assert document['entropy'] <= document['capacity_log'] + 1e-6
        assert math.log(7) <= document['capacity_log'] + 1e-6
        assert document['flow']['n'] == 3
        lines = trace.read_text().splitlines()
        assert lines[0] == 'sweep,residual,dual,phase'
        assert len(lines) > 1


class TestVertices:
    def test_jsonl(self):
        code, stdout, _ = invoke('vertices', '--netflow', '1,0,0,-1')
        lines = stdout.splitlines()
        assert code == 0
        assert len(lines) == 4
        flows = [msgspec.json.decode(line) for line in lines]
        assert all(flow['n'] == 3 for flow in flows)
        assert all(len(flow['upper']) == 3 and len(flow['subdiag']) == 2 for flow in flows)


class TestAsymptotic:
    def test_with_comparators(self):
        _, stdout, _ = invoke('asymptotic', '--family', 'tesler', '--n', '3')
        document = msgspec.json.decode(stdout)
        assert document['bound']['certified'] is False
        assert set(document['comparators']) == {'dilated_tesler', 'oneill_tesler'}

    def test_real_n(self):
        _, stdout, _ = invoke('asymptotic', '--family', 'two_rho', '--t', '1', '--n', '10.5')
        document = msgspec.json.decode(stdout)
        assert 'comparators' not in document
        assert document['bound']['method'] == 'asymptotic'

    def test_hypothesis_violation(self):
        code, _, stderr = invoke('asymptotic', '--family', 'tesler', '--n', '1')
        assert code == 2
        assert msgspec.json.decode(stderr)['type'] == 'HypothesisViolationError'


class TestSweep:
    def test_csv(self, tmp_path):
        path = tmp_path / 'sweep.csv'
        code, _, _ = invoke('sweep', '--family', 'tesler', '--n', '2..4', '--out', str(path), '--threads', '1')
        lines = path.read_text().splitlines()
        assert code == 0
        assert lines[0] == ','.join(SWEEP_COLUMNS)
        assert [line.split(',')[3] for line in lines[1:]] == ['2', '7', '40']

    def test_json(self):
        _, stdout, _ = invoke('sweep', '--family', 'cry', '--t', '1', '--n', '2,3', '--threads', '1')
        rows = msgspec.json.decode(stdout)
        assert [row['K'] for row in rows] == ['2', '4']

    def test_bad_range(self):
        code, _, stderr = invoke('sweep', '--family', 'tesler', '--n', 'a..b')
        assert code == 2
        assert msgspec.json.decode(stderr)['type'] == 'BadParamsError'


class TestCheck:
    def test_lidskii_suite(self):
        code, stdout, _ = invoke('check', '--suite', 'lidskii', '--n-max', '3', '--samples', '2')
        report = msgspec.json.decode(stdout)
        assert code == 0
        assert report['status'] == 'ok'
        assert report['failures'] == []

    def test_unknown_suite(self):
        assert invoke('check', '--suite', 'everything')[0] == 2


class TestCsvOutput:
    def test_count(self, tmp_path):
        path = tmp_path / 'count.csv'
        assert invoke('count', '--netflow', '1,1,1,-3', '--out', str(path))[0] == 0
        assert path.read_text().splitlines() == ['K', '7']

    def test_bound(self, tmp_path):
        path = tmp_path / 'bound.csv'
        assert invoke('bound', '--netflow', '1,1,1,-3', '--out', str(path))[0] == 0
        header, row = path.read_text().splitlines()
        assert header == 'name,method,log_lower,log_upper,certified'
        name, method, log_lower, log_upper, certified = row.split(',')
        assert (name, method, log_upper, certified) == ('average', 'entropy_at_flow', '', 'True')
        assert float(log_lower) <= math.log(7)

    def test_asymptotic(self, tmp_path):
        path = tmp_path / 'asymptotic.csv'
        assert invoke('asymptotic', '--family', 'tesler', '--n', '3', '--out', str(path))[0] == 0
        names = [line.split(',')[0] for line in path.read_text().splitlines()[1:]]
        assert names == ['asymptotic', 'dilated_tesler', 'oneill_tesler']

    def test_capacity(self, tmp_path):
        path = tmp_path / 'capacity.csv'
        assert invoke('capacity', '--netflow', '1,1,1,-3', '--out', str(path))[0] == 0
        header, row = path.read_text().splitlines()
        assert header == 'capacity_log,entropy,gap,sweeps,residual,fallback'
        assert math.log(7) <= float(row.split(',')[0]) + 1e-6

    @pytest.mark.parametrize(
        'argv', [('vertices', '--netflow', '1,0,0,-1'), ('check', '--suite', 'lidskii', '--n-max', '2')]
    )
    def test_no_table_output(self, tmp_path, argv):
        path = tmp_path / 'out.csv'
        code, _, stderr = invoke(*argv, '--out', str(path))
        assert code == 2
        assert msgspec.json.decode(stderr)['type'] == 'BadParamsError'
        assert not path.exists()
