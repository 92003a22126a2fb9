from matchpoly import count_perfect_matchings, genpm, genpm_bruteforce, grid, random_planar_embedded

# 12988816 domino tilings of the chessboard; the 64 vertices are far above the
# oracle cap, so genpm picks the Pfaffian kernel.
print(genpm(grid(8, 8), options={'quiet': False}))
assert count_perfect_matchings(grid(8, 8)) == 12988816

# Random weights, including negative ones, against the enumeration oracle
g, rotation = random_planar_embedded(16, seed=3, keep=0.8, weight_range=(-3, 3))
result = genpm(g, method='pfaffian')
print(result)
assert result == genpm_bruteforce(g)
