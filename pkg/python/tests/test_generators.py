from matchpoly import (DiskDrawing, InvalidDrawing, Graph, check_embedding, complete, cylindrical_drawing,
                       cylindrical_grid, cylindrical_grid_ring_blowup, cylindrical_grid_rotation, disk_drawing,
                       euler_genus, grid, grid_rotation, is_planar, planar_embed, q_graph, random_apex_planar,
                       random_planar, random_planar_embedded, ring_blowup, segregated_shallow_vortex_grid,
                       shallow_vortex_grid)
from instances import cycle
import pytest


@pytest.mark.parametrize("g, vertices, edges", [
    (shallow_vortex_grid(3), 18, 36),
    (shallow_vortex_grid(6), 72, 144),
    (segregated_shallow_vortex_grid(2), 16, 28),
    (segregated_shallow_vortex_grid(3), 36, 66),
    (cylindrical_grid(2, 3), 6, 9),
    (cylindrical_grid(4, 6), 24, 42),
    (q_graph(5, 4), 108, 215),
    (grid(3, 4), 12, 17),
    (complete(5), 5, 10),
])
def test_family_sizes(g, vertices, edges):
    assert g.vertex_count == vertices
    assert g.edge_count == edges
    assert g.is_dense()
    assert set(g.weights.values()) == {1}


def test_q_graph_terminals():
    g = q_graph(5, 4)
    assert g.neighbors(100) == (0, 1, 2, 3, 4)
    assert g.neighbors(101) == (0, 1, 2, 3, 4)
    assert g.neighbors(107) == (15, 16, 17, 18, 19)


def test_vortex_grids_are_not_planar():
    assert not is_planar(shallow_vortex_grid(3))
    assert not is_planar(segregated_shallow_vortex_grid(2))


@pytest.mark.parametrize("g, r", [
    (grid(4, 5), grid_rotation(4, 5)),
    (cylindrical_grid(3, 5), cylindrical_grid_rotation(3, 5)),
])
def test_canonical_rotations_are_planar(g, r):
    check_embedding(g, r)
    assert euler_genus(r) == 0


def test_ring_blowup_of_k4_is_k7():
    assert ring_blowup(disk_drawing(complete(4))) == complete(7)


def test_cylindrical_grid_ring_blowup():
    g = cylindrical_grid_ring_blowup(6, 12)
    assert g.vertex_count == 84
    assert cylindrical_drawing(6, 12).external_vertices == tuple(range(12))
    # the copy of vertex 0 sees 0, its neighbours 1, 11, 12 and the copies of 1 and 11
    assert g.neighbors(72) == (0, 1, 11, 12, 73, 83)


def test_disk_drawings_need_a_planar_rotation_and_a_face():
    c4 = cycle(4)
    r = planar_embed(c4)
    assert DiskDrawing(c4, r, (0, 1, 2, 3)).external_vertices == (0, 1, 2, 3)
    assert DiskDrawing(c4, r, (3, 2, 1, 0)).external_face == (3, 2, 1, 0)
    with pytest.raises(InvalidDrawing) as e_info:
        DiskDrawing(c4, r, (0, 2))
    assert e_info.match("is not a face")
    with pytest.raises(InvalidDrawing):
        disk_drawing(complete(5))
    with pytest.raises(InvalidDrawing):
        disk_drawing(Graph(2))


@pytest.mark.parametrize("seed", range(4))
def test_random_planar_graphs_are_seeded_and_planar(seed):
    g, r = random_planar_embedded(20, seed, keep=0.6)
    h, s = random_planar_embedded(20, seed, keep=0.6)
    assert g == h
    assert r == s
    check_embedding(g, r)
    assert random_planar(20, seed, keep=0.6) == g
    weighted, _ = random_planar_embedded(20, seed, weight_range=(-2, 2))
    assert all(-2 <= w <= 2 for w in weighted.weights.values())


@pytest.mark.parametrize("seed", range(4))
def test_random_apex_planar_graphs(seed):
    g = random_apex_planar(15, 3, seed)
    assert g == random_apex_planar(15, 3, seed)
    assert g.vertex_count == 15
    assert is_planar(g.delete_vertices([12, 13, 14]))
    assert all(g.degree(a) >= 1 for a in (12, 13, 14))


def test_orders_are_checked():
    with pytest.raises(ValueError) as e_info:
        cylindrical_grid(2, 2)
    assert e_info.match("s must be an integer of at least 3")
    with pytest.raises(ValueError):
        shallow_vortex_grid(0)
    with pytest.raises(ValueError):
        grid(-1, 2)
    with pytest.raises(ValueError) as e_info:
        random_apex_planar(3, 4)
    assert e_info.match("cannot have 4 apex vertices among 3")
    with pytest.raises(ValueError) as e_info:
        random_apex_planar(3, 3)
    assert e_info.match("the planar part needs a vertex")


def test_apexes_leave_a_planar_part():
    g = random_apex_planar(4, 3, 0)
    assert is_planar(g.delete_vertices([1, 2, 3]))
    assert all(g.degree(a) >= 1 for a in (1, 2, 3))
    assert g.degree(0) >= 1


@pytest.mark.parametrize("k", range(3, 9))
def test_vortex_grid_families(k):
    g = shallow_vortex_grid(k)
    assert g.vertex_count == 2 * k * k
    assert g.edge_count == 4 * k * k
    s = segregated_shallow_vortex_grid(k)
    assert s.vertex_count == 4 * k * k
    assert s.edge_count == 8 * k * k - 2 * k
