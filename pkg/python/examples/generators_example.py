from matchpoly import (cylindrical_grid_ring_blowup, is_planar, q_graph, segregated_shallow_vortex_grid,
                       shallow_vortex_grid)

for name, g in [('shallow vortex grid H_4', shallow_vortex_grid(4)),
                ('segregated shallow vortex grid H\'_3', segregated_shallow_vortex_grid(3)),
                ('ring blowup of the 4 x 8 cylindrical grid', cylindrical_grid_ring_blowup(4, 8)),
                ('Q_{3,2}', q_graph(3, 2))]:
    print(f'{name}: {g.vertex_count} vertices, {g.edge_count} edges, planar: {is_planar(g)}')

assert shallow_vortex_grid(4).vertex_count == 32
assert not is_planar(shallow_vortex_grid(4))
assert cylindrical_grid_ring_blowup(4, 8).vertex_count == 40
