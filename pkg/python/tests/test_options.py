from matchpoly import (WorkLimitExceeded, TooLarge, X, apex_planar_decomposition, complete, default_options, genpm,
                       genpm_bruteforce, genpm_decomposed, grid, process_options)
from instances import cycle, grid_with_ears
import os
import pytest
from sys import platform


def test_defaults():
    options = process_options()
    assert options == {'quiet': True, 'k': 4, 'oracle_cap': 20, 'work_limit': 1_000_000, 'threads': os.cpu_count() or 1}
    options['k'] = 2
    assert default_options['k'] == 4


def test_given_options_are_not_modified():
    given = {'k': 3}
    options = process_options(given)
    assert given == {'k': 3}
    assert options['k'] == 3
    assert options['oracle_cap'] == 20


def test_unknown_option():
    with pytest.raises(ValueError) as e_info:
        genpm(cycle(4), options={'ftarget': 20})
    assert e_info.match("Unknown option 'ftarget'")


@pytest.mark.parametrize("options, message", [
    ({'k': 0}, "Option 'k' must be a positive integer"),
    ({'threads': 1.5}, "Option 'threads' must be a positive integer"),
    ({'work_limit': True}, "Option 'work_limit' must be a positive integer"),
    ({'oracle_cap': -1}, "Option 'oracle_cap' must be a nonnegative integer"),
])
def test_bad_option_values(options, message):
    with pytest.raises(ValueError) as e_info:
        process_options(options)
    assert e_info.match(message)


def test_options_must_be_a_dict():
    with pytest.raises(ValueError) as e_info:
        process_options([('k', 3)])
    assert e_info.match("Options must be provided as a dict, not 'list'")


def test_oracle_cap():
    with pytest.raises(TooLarge):
        genpm_bruteforce(grid(2, 6), options={'oracle_cap': 10})
    assert genpm_bruteforce(grid(2, 6), options={'oracle_cap': 12}) == 13 * X ** 6
    # above the cap a planar graph goes to the Pfaffian kernel
    assert genpm(grid(2, 6), options={'oracle_cap': 10}) == 13 * X ** 6


def test_k():
    d = apex_planar_decomposition(complete(6), [0, 1])
    assert genpm_decomposed(complete(6), d=d, options={'k': 2}) == 15 * X ** 3
    assert genpm_decomposed(complete(6), d=d, k=2) == 15 * X ** 3


def test_work_limit():
    d = apex_planar_decomposition(complete(6), [0, 1])
    with pytest.raises(WorkLimitExceeded) as e_info:
        genpm_decomposed(complete(6), d=d, options={'work_limit': 3})
    assert e_info.match("table_genus_apex enumerated more than 3 candidate matchings")


def test_threads():
    g, d = grid_with_ears()
    assert genpm(g, decomposition=d, options={'threads': 4}) == genpm(g, decomposition=d)


@pytest.mark.skipif(platform == "win32", reason="Windows outputs some strange characters, probably \\r\\n")
@pytest.mark.parametrize("case", ["BRUTEFORCE", "PFAFFIAN", "DECOMPOSITION"])
def test_quiet(capfd, case):
    options = {'quiet': False}
    if case == "BRUTEFORCE":
        genpm(cycle(4), options=options)
    elif case == "PFAFFIAN":
        genpm(grid(2, 12), options=options)
    elif case == "DECOMPOSITION":
        g, d = grid_with_ears()
        genpm(g, decomposition=d, options=options)
    outerr = capfd.readouterr()
    if case == "BRUTEFORCE":
        assert outerr.out == "Graph within the oracle cap, applying BRUTEFORCE\n"
    elif case == "PFAFFIAN":
        assert outerr.out == "Planar graph above the oracle cap, applying PFAFFIAN\n"
    elif case == "DECOMPOSITION":
        assert outerr.out == "Decomposition provided, applying the decomposition driver\n"
    assert outerr.err == ''


def test_quiet_by_default(capfd):
    genpm(cycle(4))
    assert capfd.readouterr().out == ''
