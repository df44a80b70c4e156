"""
Checking the conjecture exhaustively at small n
===============================================

Every label system with n <= 4 is realized and handed to an exact
backtracking oracle.  A chromatic number above n would be a
counterexample.
"""

from collections import Counter

from efl import chromatic_number, enumerate_systems, realize

for n in range(1, 5):
    chis = Counter(chromatic_number(realize(s)) for s in enumerate_systems(n))
    print(f"n={n}: chromatic numbers {dict(chis)}")
