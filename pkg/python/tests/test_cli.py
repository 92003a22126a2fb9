from matchpoly import complete, grid, read_graph, read_rotation, write_decomposition, write_graph
from matchpoly._cli import _parser, main
from instances import cycle, ladder_decomposition
import json
import os
import pytest


def _write(tmp_path, g, name='g.json'):
    path = tmp_path / name
    path.write_text(write_graph(g))
    return str(path)


@pytest.mark.parametrize("g, args, expected", [
    (cycle(4), ['--auto'], '2*x^2'),
    (cycle(4), [], '2*x^2'),
    (complete(6), ['--apex', 'v0,v1'], '15*x^3'),
    (complete(6), ['--apex', '0,1', '--threads', '2'], '15*x^3'),
])
def test_genpm(tmp_path, capfd, g, args, expected):
    assert main(['genpm', _write(tmp_path, g)] + args) == 0
    assert capfd.readouterr().out == expected + '\n'


def test_genpm_with_a_decomposition_file(tmp_path, capfd):
    d = tmp_path / 'd.json'
    d.write_text(write_decomposition(ladder_decomposition(6)))
    assert main(['genpm', _write(tmp_path, grid(2, 6)), '--decomposition', str(d)]) == 0
    assert capfd.readouterr().out == '13*x^6\n'


def test_count(tmp_path, capfd):
    assert main(['count', _write(tmp_path, grid(6, 6))]) == 0
    assert capfd.readouterr().out == '6728\n'


@pytest.mark.parametrize("target, expected", [(4, 'true 1'), (6, 'true 1'), (5, 'false 0')])
def test_exact(tmp_path, capfd, target, expected):
    path = _write(tmp_path, cycle(4, [1, 2, 3, 4]))
    assert main(['exact', path, '--target', str(target)]) == 0
    assert capfd.readouterr().out == expected + '\n'


def test_json_output(tmp_path, capfd):
    path = _write(tmp_path, cycle(4, [1, 2, 3, 4]))
    assert main(['genpm', path, '--json']) == 0
    assert json.loads(capfd.readouterr().out) == {'genpm': '1*x^6+1*x^4'}
    assert main(['exact', path, '--target', '4', '--json']) == 0
    assert json.loads(capfd.readouterr().out) == {'exact': {'exists': True, 'count': 1}}


def test_validate(tmp_path, capfd):
    assert main(['validate', _write(tmp_path, cycle(4))]) == 0
    assert capfd.readouterr().out == 'ok\n'
    assert main(['validate', _write(tmp_path, complete(5))]) == 2
    assert capfd.readouterr().out == 'clause planarity fails at node(s) 0: torso - A is not planar\n'


def test_dump_tables(tmp_path, capfd):
    assert main(['genpm', _write(tmp_path, cycle(4)), '--dump-tables']) == 0
    outerr = capfd.readouterr()
    assert outerr.out == '2*x^2\n'
    assert outerr.err == '# node 0, boundary []\nF=[] -> 2*x^2\n'


def test_oracle_and_fkt(tmp_path, capfd):
    assert main(['oracle', _write(tmp_path, complete(4))]) == 0
    assert capfd.readouterr().out == '3*x^2\n'
    assert main(['gen', 'grid', '4', '4', '--with-embedding']) == 0
    document = capfd.readouterr().out
    assert read_rotation(document) is not None
    path = tmp_path / 'grid.json'
    path.write_text(document)
    assert main(['fkt', str(path)]) == 0
    assert capfd.readouterr().out == '36*x^8\n'


def test_gen(capfd):
    assert main(['gen', 'cylindrical-grid', '2', '3']) == 0
    g = read_graph(capfd.readouterr().out)
    assert g.vertex_count == 6
    assert g.edge_count == 9
    assert main(['gen', 'random-apex-planar', '12', '2', '--seed', '5']) == 0
    first = capfd.readouterr().out
    assert main(['gen', 'random-apex-planar', '12', '2', '--seed', '5']) == 0
    assert capfd.readouterr().out == first


@pytest.mark.parametrize("command, code", [
    (['count', 'no-such-file.json'], 1),
    (['gen', 'grid', '3'], 1),
    (['genpm', '{g}', '--apex', 'a,b'], 1),
    (['genpm', '{k9}', '--auto'], 2),
    (['genpm', '{k5}'], 2),
    (['oracle', '{big}'], 3),
    (['genpm', '{k5}', '--work-limit', '0'], 2),
])
def test_exit_codes(tmp_path, capfd, command, code):
    paths = {'g': _write(tmp_path, cycle(4)), 'k9': _write(tmp_path, complete(9), 'k9.json'),
             'k5': _write(tmp_path, complete(5), 'k5.json'), 'big': _write(tmp_path, grid(6, 6), 'big.json')}
    assert main([part.format(**paths) for part in command]) == code
    assert capfd.readouterr().err.startswith('matchpoly: ')


def test_unreadable_json(tmp_path, capfd):
    path = tmp_path / 'bad.json'
    path.write_text('{"n": 4, "edges": [[0, 1]')
    assert main(['genpm', str(path)]) == 1
    assert 'matchpoly: ' in capfd.readouterr().err


def test_option_defaults_follow_the_library(tmp_path):
    args = _parser().parse_args(['count', _write(tmp_path, cycle(4))])
    assert (args.k, args.oracle_cap, args.work_limit) == (4, 20, 1_000_000)
    assert args.threads == (os.cpu_count() or 1)


def test_generator_arity_is_a_format_error(capfd):
    assert main(['gen', 'grid', '3']) == 1
    assert 'grid takes the parameters' in capfd.readouterr().err
