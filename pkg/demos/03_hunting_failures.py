"""
Where the procedure breaks
==========================

Run many random instances and sort the outcomes.  Two kinds of failure
show up:

* Improper: aligning a later vertex swaps two colors across the whole
  matrix, which drags an already aligned vertex onto a color used
  elsewhere in its clique;
* Stuck at step 6: a cell of a two-clique vertex has no color left that is
  absent from both its row and its column.

Every failure is reported, never passed off as a coloring.
"""

from collections import Counter

from efl import random_system, realize, run_procedure
from efl.colorer import Improper, outcome_kind

for n in range(4, 9):
    counts = Counter(outcome_kind(run_procedure(realize(random_system(n, 0.5, 0.3, s))))
                     for s in range(500))
    print(n, dict(counts))

# the smallest improper example from the hunt above
system = random_system(5, 0.5, 0.3, 58)
out = run_procedure(realize(system))
assert isinstance(out, Improper)
print(system.to_text())
for event in out.trace:
    print(event)
for v in out.violations:
    print(v)
print(out.matrix.entries)
