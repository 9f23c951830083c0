#!/usr/bin/env python3
"""Finite racks as operation matrices.

A rack is a set with a binary operation > whose right translations are
bijections and which is right self-distributive.  Stored as a matrix
with entry (i, j) = k meaning x_i > x_j = x_k, everything about a finite
rack is exhaustively checkable.
"""

from tsracks import (
    constant_action_rack,
    conjugation_rack,
    find_isomorphism,
    make_linear,
    make_quotient,
    maximal_subquandle,
    rack_rank,
    validate_rack,
)

# the constant action rack with sigma = (123): x > y = sigma(x)
rack = constant_action_rack([2, 3, 1])
print("constant action rack matrix:")
print(rack.to_text())

# its kink map is sigma itself, so the rack rank is 3
n, per = rack_rank(rack)
print("rack rank:", n, " per element:", per)

# a non-quandle rack of smallest size: Z_4 with x > y = x + 2y
x = make_linear(4, 1, 2)
rx = x.to_finite_rack(order=[(1,), (2,), (3,), (0,)])
print("\nZ_4 with t=1, s=2 (elements 1,2,3,4=0):")
print(rx.to_text())
print("rack rank:", rack_rank(rx)[0])

# the maximal subquandle collects the elements of rack rank 1
print("maximal subquandle of the lexicographic export:",
      maximal_subquandle(x.to_finite_rack()))

# conjugation in a group is always a quandle; try S_3
from itertools import permutations

perms = sorted(permutations(range(3)))
index = {p: i + 1 for i, p in enumerate(perms)}
table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms]
         for p in perms]
conj = conjugation_rack(table, 1)
print("conjugation quandle of S_3: rank", rack_rank(conj)[0])

# brute-force isomorphism search: the 4-element quotient rack below is
# isomorphic to the linear one even though their additive structures
# (Z_2 + Z_2 versus Z_4) differ
y = make_quotient(2, [1, 1])
witness = find_isomorphism(x.to_finite_rack(), y.to_finite_rack())
print("\nlinear(4,1,2) ~ quotient(2, t+1):", witness)

# validation rejects non-racks with a witness
try:
    validate_rack([[1, 2], [2, 1]])
except Exception as exc:
    print("\nrejected non-rack:", exc)
