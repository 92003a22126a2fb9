from matchpoly import Graph, as_laurent, exact_matching, genpm

# The six-cycle with weights 1..6: its two perfect matchings weigh 1 + 3 + 5 and 2 + 4 + 6
g = Graph(6, [(i, (i + 1) % 6, i + 1) for i in range(6)])
print(genpm(g))
assert as_laurent(genpm(g)) == {9: 1, 12: 1}

print(exact_matching(g, None, 9))
assert exact_matching(g, None, 9) == (True, 1)
assert exact_matching(g, None, 10) == (False, 0)

# Weights can be overridden per call
assert exact_matching(g, {(0, 1): 2}, 10) == (True, 1)
