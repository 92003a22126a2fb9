from matchpoly import (X, NotPlanar, TooLarge, apex_planar_decomposition, complete, complete_bipartite, genpm,
                       shallow_vortex_grid)
from instances import cycle, wheel
import logging
import pytest


def test_method_not_recognized():
    with pytest.raises(ValueError) as e_info:
        genpm(cycle(4), method='fkt')
    assert e_info.match("Method must be one of BRUTEFORCE, PFAFFIAN, or DECOMPOSITION, not 'fkt'")


@pytest.mark.parametrize("method", ["bruteforce", "PFAFFIAN", "Decomposition"])
def test_method_names_ignore_case(method):
    assert genpm(wheel(5), method=method) == 5 * X ** 3


@pytest.mark.parametrize("method", ["bruteforce", "pfaffian"])
def test_providing_a_decomposition_to_a_method_that_cannot_use_it(method):
    d = apex_planar_decomposition(complete(6), [0, 1])
    with pytest.raises(ValueError) as e_info:
        genpm(complete(6), method=method, decomposition=d)
    assert e_info.match("A decomposition was provided for a method that cannot use it")


def test_pfaffian_method_on_a_non_planar_graph():
    with pytest.raises(NotPlanar):
        genpm(complete_bipartite(3, 3), method='pfaffian')


def test_large_non_planar_graph_without_a_decomposition():
    with pytest.raises(TooLarge) as e_info:
        genpm(shallow_vortex_grid(6))
    assert e_info.match("provide a decomposition")


def test_large_weights_warn(caplog):
    with caplog.at_level(logging.WARNING):
        assert genpm(cycle(4), {(0, 1): 40, (2, 3): -40}) == X ** 2 + 1
    assert "exceed |G|^2 = 16 in magnitude" in caplog.text
