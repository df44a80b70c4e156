"""
The color-matrix procedure, step by step
========================================

A vertex in three cliques pins three cells of the color matrix to one color.
The procedure gets there with global swaps of two colors, then repairs the
cells of vertices in two cliques.  Replaying the trace shows every edit.
"""

from efl import LabelSystem, realize, run_procedure, verify_coloring
from efl.colorer import initial_matrix, replay

system = LabelSystem(5, [(1, 3), (1, 4, 5), (2, 3, 4)])
inst = realize(system)
print(inst.to_text())

C = initial_matrix(inst)
print("start (diagonal and disjoint pairs blanked):")
print(C.entries)

out = run_procedure(inst)
for event in out.trace:
    print(event)
    C = replay(C, [event])
    print(C.entries)

print(type(out).__name__, verify_coloring(inst, out.coloring))
