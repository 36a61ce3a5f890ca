"""
Tests for the command line.
"""

import csv
import io
import json
import logging
import math

import pytest

from cornerforge.cli import main
from cornerforge.corners import read_points


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv('CORNERFORGE_THREADS', raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestConstruct:

    def test_writes_points_and_report(self, capsys, tmp_path):
        path = str(tmp_path / "a1.txt")
        code, out, _ = run(capsys, 'construct', '--q', '4', '--d', '1', '--r', '1', '--out', path)
        assert code == 0
        (report,) = json_lines(out)
        assert report['size'] == '4'
        assert report['density'] == '0.25'
        assert report['construction'] == 'green'
        assert len(read_points(path)) == 4

        code, out, _ = run(capsys, 'verify', '--in', path)
        assert code == 0
        assert out.strip() == 'corner-free'

    def test_default_radius(self, capsys):
        code, out, _ = run(capsys, 'construct', '--q', '2', '--d', '5')
        assert code == 0
        (report,) = json_lines(out)
        assert (report['r'], report['size'], report['N']) == (3, '80', '32')

    def test_bad_base(self, capsys):
        code, _, err = run(capsys, 'construct', '--q', '1', '--d', '3')
        assert code == 2
        assert 'q' in err

    def test_point_cap(self, capsys, tmp_path):
        path = str(tmp_path / "big.txt")
        code, _, err = run(capsys, 'construct', '--q', '2', '--d', '5', '--out', path,
                           '--max-points', '10')
        assert code == 3
        assert '80' in err

    def test_empty_radius_writes_nothing(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        code, out, err = run(capsys, 'construct', '--q', '4', '--d', '1', '--r', '2',
                             '--out', str(path))
        assert code == 2
        assert out == ''
        assert 'empty' in err
        assert not path.exists()

    def test_point_cap_writes_nothing(self, capsys, tmp_path):
        path = tmp_path / "capped.txt"
        code, _, _ = run(capsys, 'construct', '--q', '2', '--d', '5', '--out', str(path),
                         '--max-points', '10')
        assert code == 3
        assert not path.exists()

    def test_csv(self, capsys):
        code, out, _ = run(capsys, 'construct', '--q', '2', '--d', '5', '--format', 'csv')
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]['size'] == '80'
        assert rows[0]['construction'] == 'green'

    def test_deterministic(self, capsys):
        first = run(capsys, 'construct', '--q', '5', '--d', '9')
        second = run(capsys, 'construct', '--q', '5', '--d', '9')
        assert first == second


class TestCount:

    def test_small_table(self, capsys):
        code, out, _ = run(capsys, 'count', '--q', '4', '--d', '1')
        assert code == 0
        (table,) = json_lines(out)
        assert table['entries'] == {'0': '2', '1': '4', '4': '4', '9': '2'}
        assert table['best'] == {'r': 1, 'count': '4'}

    def test_closed_form(self, capsys):
        code, out, _ = run(capsys, 'count', '--q', '2', '--d', '16')
        assert code == 0
        (table,) = json_lines(out)
        assert table['entries'] == {str(k): str(math.comb(16, k) * 2 ** k) for k in range(17)}

    def test_total(self, capsys):
        code, out, _ = run(capsys, 'count', '--q', '4', '--d', '10')
        assert code == 0
        (table,) = json_lines(out)
        assert int(table['total']) == 12 ** 10
        assert sum(int(c) for c in table['entries'].values()) == 12 ** 10

    def test_csv(self, capsys):
        code, out, _ = run(capsys, 'count', '--q', '4', '--d', '1', '--format', 'csv')
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row['kind'] for row in rows] == ['entry'] * 4 + ['best']
        assert rows[-1]['r'] == '1'

    def test_bad_flag(self, capsys):
        code, _, _ = run(capsys, 'count', '--q', 'four', '--d', '1')
        assert code == 2


class TestVerify:

    def test_corner(self, capsys, tmp_path):
        path = tmp_path / "corner.txt"
        path.write_text("N=2\n0,0\n1,0\n0,1\n")
        code, out, _ = run(capsys, 'verify', '--in', str(path))
        assert code == 1
        assert json.loads(out) == {'x': 0, 'y': 0, 'd': 1}

    def test_malformed(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("N=4\n0;1\n")
        code, _, err = run(capsys, 'verify', '--in', str(path))
        assert code == 2
        assert 'line 2' in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, 'verify', '--in', str(tmp_path / "nope.txt"))
        assert code == 2
        assert err.startswith('error:')

    def test_threads_from_environment(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "corner.txt"
        path.write_text("N=3\n2,2\n1,2\n2,1\n0,0\n")
        expected = run(capsys, 'verify', '--in', str(path))
        monkeypatch.setenv('CORNERFORGE_THREADS', '0')
        assert run(capsys, 'verify', '--in', str(path)) == expected


class TestBehrend:

    def test_explicit_params_round_trip(self, capsys, tmp_path):
        path = str(tmp_path / "behrend.txt")
        code, out, _ = run(capsys, 'behrend', '--D', '2', '--n', '2', '--r', '1', '--out', path)
        assert code == 0
        (report,) = json_lines(out)
        assert (report['construction'], report['size'], report['N']) == ('behrend', '14', '9')
        assert len(read_points(path)) == 14
        assert run(capsys, 'verify', '--in', path)[0] == 0

    def test_search(self, capsys):
        code, out, _ = run(capsys, 'behrend', '--n-target', '9')
        assert code == 0
        (report,) = json_lines(out)
        assert (report['q'], report['d'], report['r'], report['size']) == (3, 2, 1, '14')

    def test_needs_shape(self, capsys):
        code, _, _ = run(capsys, 'behrend', '--D', '2')
        assert code == 2

    def test_point_cap(self, capsys, tmp_path):
        code, _, err = run(capsys, 'behrend', '--D', '2', '--n', '2', '--r', '1',
                           '--out', str(tmp_path / "b.txt"), '--max-points', '5')
        assert code == 3
        assert '14' in err

    def test_check_limit_from_config(self, capsys, caplog, tmp_path):
        caplog.set_level(logging.DEBUG, logger='cornerforge.construction.behrend')
        path = str(tmp_path / "b.txt")
        shape = ('behrend', '--D', '2', '--n', '2', '--r', '1', '--out', path)

        assert run(capsys, *shape)[0] == 0
        assert 'Trusting' not in caplog.text

        config = tmp_path / "config.json"
        config.write_text(json.dumps({'behrend': {'check_limit': 1}}))
        caplog.clear()
        assert run(capsys, '--config', str(config), *shape)[0] == 0
        assert 'Trusting' in caplog.text
        assert len(read_points(path)) == 14


class TestCompare:

    def test_d5(self, capsys):
        code, out, _ = run(capsys, 'compare', '--d-list', '5')
        assert code == 0
        (row,) = json_lines(out)
        assert row['d'] == 5
        assert (row['green']['N'], row['green']['size']) == ('32', '80')
        assert row['behrend']['N'] == '32'
        assert row['behrend']['construction'] == 'behrend'
        assert row['c_target'] == pytest.approx(1.82217, abs=1e-4)

    def test_d10(self, capsys):
        code, out, _ = run(capsys, 'compare', '--d-list', '10')
        assert code == 0
        (row,) = json_lines(out)
        assert row['green']['N'] == str(2 ** 20)
        assert row['green']['c_emp'] > 0
        assert row['behrend']['c_emp'] > row['green']['c_emp']

    def test_degenerate(self, capsys):
        code, out, err = run(capsys, 'compare', '--d-list', '5,4')
        assert code == 2
        assert out == ''
        assert 'q < 2' in err

    def test_csv(self, capsys):
        code, out, _ = run(capsys, 'compare', '--d-list', '5,6', '--format', 'csv')
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row['construction'] for row in rows] == ['green', 'behrend'] * 2
        assert all(row['c_target'] for row in rows)

    def test_bad_list(self, capsys):
        assert run(capsys, 'compare', '--d-list', '5,x')[0] == 2


class TestOracle:

    @pytest.mark.parametrize("n, size", [(1, 1), (2, 3)])
    def test_small(self, capsys, n, size):
        code, out, _ = run(capsys, 'oracle', '--n', str(n))
        assert code == 0
        assert json.loads(out)['max_size'] == size

    def test_over_cap(self, capsys):
        code, _, err = run(capsys, 'oracle', '--n', '99')
        assert code == 3
        assert '99' in err

    def test_cap_from_config(self, capsys, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({'oracle': {'max_n': 2}}))
        code, _, _ = run(capsys, '--config', str(config), 'oracle', '--n', '3')
        assert code == 3
        code, _, _ = run(capsys, '--config', str(config), 'oracle', '--n', '3', '--max-n', '3')
        assert code == 0


def test_no_command(capsys):
    assert run(capsys)[0] == 2
