from matchpoly import Graph, clique_sum_decomposition, genpm, grid, validate_decomposition

# A 4 x 4 grid with a K5 glued onto its corner 15. The K5 part is not planar,
# but deleting its apex 16 leaves a K4.
k5 = [(u, v) for u in range(15, 20) for v in range(u + 1, 20)]
g = Graph(20, list(grid(4, 4).edges) + k5)
d = clique_sum_decomposition(g, [set(range(16)), set(range(15, 20))], [(0, 1)], apex={1: {16}})
print(validate_decomposition(g, d, 4).describe())

result = genpm(g, decomposition=d, options={'quiet': False})
print(result)
# 15 stays in the grid (36 tilings) and the rest of the K5 is a K4 (3 matchings)
assert str(result) == '108*x^10'
assert result == genpm(g, method='bruteforce')
