"""
Coloring H_n from a symmetric latin square
==========================================

H_n is the smallest instance: every two cliques share exactly one vertex.
Its vertices line up with the cells of a symmetric matrix, so any symmetric
latin square hands out a proper n-coloring.
"""

from efl import build_hn, color_hn, cyclic_symmetric_latin, verify_coloring

n = 5
inst = build_hn(n)
print(inst.to_text())

# b_i_j sits in cell (i, j); a_i_i sits on the diagonal
square = cyclic_symmetric_latin(n)
print(square.to_text())

# every clique reads one row of the square, and rows are permutations
coloring = color_hn(n)
for i, clique in enumerate(inst.cliques, start=1):
    print(i, sorted((coloring[v], v) for v in clique))

print("violations:", verify_coloring(inst, coloring))

# even orders repeat values on the diagonal; the private vertices a_i_i
# are never adjacent, so that is harmless
print(cyclic_symmetric_latin(4).entries.diagonal())
