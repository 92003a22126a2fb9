import logging

from matchpoly import (X, BoundaryGraph, Branching, Graph, PreconditionViolated, planar_embed, reduce_branching,
                       table_branching, table_of)
from instances import cycle, random_weights, wheel
import numpy as np
import pytest


def _branch(g, interior, boundary):
    '''The part of g on ``interior`` with its edges into ``boundary``.'''
    interior = set(interior)
    edges = {e: w for e, w in g.weights.items() if e[0] in interior or e[1] in interior}
    return BoundaryGraph(Graph(vertices=interior | set(boundary), edges=edges), boundary)


def _triangle_with_tail():
    # triangle 0, 1, 2 with the branch 2-3 hanging off 2
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    return Branching(BoundaryGraph(g, {0}), set(), [_branch(g, {3}, {2})])


def _hexagon_with_branches(weights=None, boundary=(0,), apex=()):
    '''
    The six-cycle 0..5 with a square 1-6-7-2 (and chord 1-7) hanging off 1, 2,
    a claw centred at 8 hanging off 3, 4, 5, and an apex 9 joined to 0, 2, 4.
    '''
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(1, 6), (6, 7), (7, 2), (1, 7), (3, 8), (4, 8), (5, 8), (9, 0), (9, 2), (9, 4)]
    g = Graph(10, edges)
    if weights is not None:
        g = Graph(10, weights(g))
    branches = [_branch(g, {6, 7}, {1, 2}), _branch(g, {8}, {3, 4, 5})]
    return Branching(BoundaryGraph(g, set(boundary)), set(apex), branches)


def test_triangle_with_a_tail():
    br = _triangle_with_tail()
    br.check()
    sp = [table_of(b) for b in br.branches]
    assert sp == [{((2, 3),): X}]
    assert table_branching(br, sp) == {((0, 1),): X ** 2}


@pytest.mark.parametrize("boundary, apex", [((0,), (9,)), ((0, 9), ()), ((0, 3), (9,)), ((), (9,))])
@pytest.mark.parametrize("seed", range(25))
def test_branching_table_matches_direct_evaluation(boundary, apex, seed):
    br = _hexagon_with_branches(lambda g: random_weights(g, seed, -2, 3), boundary, apex)
    sp = {i: table_of(b) for i, b in enumerate(br.branches)}
    assert table_branching(br, sp) == table_of(br.host)


def test_branching_with_a_declared_embedding():
    br = _hexagon_with_branches(apex=(9,))
    centre = br.shrunken_torso().delete_vertices(br.apex)
    declared = Branching(br.host, br.apex, br.branches, planar_embed(centre))
    declared.check()
    sp = [table_of(b) for b in br.branches]
    assert table_branching(declared, sp) == table_of(br.host)


def test_shrunken_torso():
    br = _hexagon_with_branches()
    torso = br.shrunken_torso()
    assert set(torso.vertices) == {0, 1, 2, 3, 4, 5, 9}
    # the residual boundary 3, 4, 5 is completed into a triangle
    assert torso.has_edge(3, 5)
    assert torso.weight(3, 5) == 0
    assert br.interior(0) == {6, 7}


def test_reduce_branching():
    reduced = reduce_branching(_triangle_with_tail(), [(0, 1)])
    assert set(reduced.host.graph.vertices) == {2, 3}
    assert reduced.host.boundary == set()
    assert reduced.branches[0].boundary == {2}
    with pytest.raises(PreconditionViolated) as e_info:
        reduce_branching(_triangle_with_tail(), [(1, 2)])
    assert e_info.value.clause == 'reduction'


def test_missing_sign_post():
    br = _triangle_with_tail()
    with pytest.raises(PreconditionViolated) as e_info:
        table_branching(br, {})
    assert e_info.value.clause == 'sign-post'


def test_nested_residual_boundaries():
    g = Graph(8, list(cycle(6).edges) + [(1, 6), (2, 6), (1, 7)])
    br = Branching(BoundaryGraph(g, {0}), set(), [_branch(g, {6}, {1, 2}), _branch(g, {7}, {1})])
    with pytest.raises(PreconditionViolated) as e_info:
        br.check()
    assert e_info.value.clause == 'containment'


def test_apex_inside_a_branch():
    br = _hexagon_with_branches()
    bad = Branching(br.host, {8}, br.branches)
    with pytest.raises(PreconditionViolated) as e_info:
        bad.check()
    assert e_info.value.clause == 'apex-interior'


def test_branch_must_hold_every_edge_of_its_interior():
    br = _hexagon_with_branches()
    g = br.host.graph
    cut = BoundaryGraph(g.induced_subgraph({1, 2, 6, 7}).delete_edges([(1, 2), (1, 7)]), {1, 2})
    bad = Branching(br.host, set(), [cut, br.branches[1]])
    with pytest.raises(PreconditionViolated) as e_info:
        bad.check()
    assert e_info.value.clause == 'branch-separation'


def test_residual_boundary_off_every_face():
    # the hub 0 and the rim vertices 1, 3 share no face of the wheel
    g = Graph(7, list(wheel(5).edges) + [(0, 6), (1, 6), (3, 6)])
    br = Branching(BoundaryGraph(g, set()), set(), [_branch(g, {6}, {0, 1, 3})])
    with pytest.raises(PreconditionViolated) as e_info:
        br.check()
    assert e_info.value.clause == 'face'


def test_residual_boundary_too_large():
    br = _hexagon_with_branches(boundary=(0, 1, 2, 3))
    with pytest.raises(PreconditionViolated) as e_info:
        br.check()
    assert e_info.value.clause == 'residual-size'


def _random_branching(seed):
    '''
    A cycle 0..n-1 with one to three branches hanging off disjoint arcs of
    up to three consecutive cycle vertices, a lone boundaryless branch when
    there is only one, and sometimes an apex joined to the cycle.
    '''
    rng = np.random.default_rng(seed)
    n = int(rng.integers(6, 8))
    count = int(rng.integers(1, 4))
    sizes = [int(rng.integers(0 if count == 1 else 1, 4)) for _ in range(count)]
    while sum(sizes) > n:
        sizes[sizes.index(max(sizes))] -= 1
    slack = n - sum(sizes)
    start = int(rng.integers(n))
    arcs = []
    for size in sizes:
        arcs.append([(start + j) % n for j in range(size)])
        gap = int(rng.integers(0, slack + 1))
        start, slack = start + size + gap, slack - gap
    edges = [(i, (i + 1) % n) for i in range(n)]
    interiors, fresh = [], n
    for arc in arcs:
        inner = list(range(fresh, fresh + int(rng.integers(1, 3))))
        fresh += len(inner)
        interiors.append(inner)
        edges += [(u, v) for u in arc + inner for v in inner if u < v and rng.random() < 0.6]
    apex = set()
    if rng.random() < 0.5:
        apex = {fresh}
        edges += [(fresh, int(v)) for v in rng.choice(n, size=int(rng.integers(2, 4)), replace=False)]
        fresh += 1
    boundary = {int(v) for v in rng.choice(n, size=int(rng.integers(0, 3)), replace=False)}
    if apex and rng.random() < 0.5:
        boundary |= apex
    g = Graph(fresh, edges)
    g = Graph(fresh, random_weights(g, seed, -2, 2))
    branches = [_branch(g, inner, arc) for arc, inner in zip(arcs, interiors)]
    return Branching(BoundaryGraph(g, boundary), apex, branches)


@pytest.mark.parametrize("seed", range(60))
def test_random_branchings_match_direct_evaluation(seed):
    br = _random_branching(seed)
    sp = [table_of(b) for b in br.branches]
    assert table_branching(br, sp) == table_of(br.host)


@pytest.mark.parametrize("seed", range(20))
def test_random_branchings_with_a_declared_embedding(seed, caplog):
    br = _random_branching(seed)
    centre = br.shrunken_torso().delete_vertices(br.apex)
    declared = Branching(br.host, br.apex, br.branches, planar_embed(centre))
    sp = [table_of(b) for b in br.branches]
    with caplog.at_level(logging.DEBUG, logger='matchpoly'):
        assert table_branching(declared, sp) == table_of(br.host)
    assert 'embedding afresh' not in caplog.text


def test_random_branchings_cover_every_shape():
    shapes = set()
    for seed in range(60):
        br = _random_branching(seed)
        shapes.add((len(br.branches), max(len(b.boundary) for b in br.branches), bool(br.apex)))
    assert {count for count, _, _ in shapes} == {1, 2, 3}
    assert {size for _, size, _ in shapes} >= {1, 2, 3}
    assert {apex for _, _, apex in shapes} == {False, True}
