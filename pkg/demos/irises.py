"""
Building b-colorings from irises
================================

A plain iris needs girth 6 and no 7-cycle; the dilated version reaches
further but needs girth 10.
"""

from bcontinuity import color_from_dilated_iris, color_from_iris, find_dilated_iris, find_iris, m_degree, validate
from bcontinuity.generators import cycle, random_girth

g = random_girth(20, 6, seed=3)
print("n =", g.n, "edges =", len(g.edges), "m =", m_degree(g))

for k in range(3, m_degree(g) + 1):
    w = find_iris(g, k)
    if w is None:
        print(k, "no plain iris")
        continue
    c = color_from_iris(g, w)
    print(k, "center", w.center, "S", w.s_set, "->", validate(g, c).is_b_coloring)

# dilated witnesses: members at distance 2 hang off distinct connectors
c12 = cycle(12)
w = find_dilated_iris(c12, 3)
print(w.to_dict())
print(color_from_dilated_iris(c12, w).to_text())
