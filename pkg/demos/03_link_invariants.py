#!/usr/bin/env python3
"""Counting and enhanced link invariants from diagram labelings.

A labeling of a blackboard-framed oriented diagram by a rack X puts an
element of X on every arc so that each crossing satisfies
under-out = under-in > over (inverse operation at negative crossings).
Summing labeling counts over a full period of framings (Z_N)^c gives an
invariant of the unframed link; keeping more of each labeling than its
existence gives the enhancements.
"""

from tsracks import (
    additive_enhanced,
    constant_action_rack,
    counting_invariant,
    enumerate_homs,
    framed_family,
    make_linear,
    parse_braid,
    parse_link,
    s_enhanced,
    writhe_enhanced,
)

# the two-component unlink and the Hopf link both have 4 labelings by the
# two-element constant action rack, but they occur at different framings
sigma = constant_action_rack([2, 1])
unlink = parse_link("unknots: 2")
hopf = parse_braid(2, [1, 1])
for name, diagram in (("unlink", unlink), ("hopf", hopf)):
    counts = {w: len(enumerate_homs(d, sigma))
              for w, d in framed_family(diagram, 2).items()}
    print(name, "labelings by framing:", counts)
print("counting invariant:", counting_invariant(unlink, sigma),
      "=", counting_invariant(hopf, sigma))
print("writhe-enhanced:", writhe_enhanced(unlink, sigma),
      "vs", writhe_enhanced(hopf, sigma))

# the additive enhancement keeps the subgroup generated by the labels;
# on the (2,n) torus links with Z_4 (t=1, s=2) it depends on n mod 4
z4 = make_linear(4, 1, 2)
print("\nadditive enhancement on torus links T(2,n):")
for n in range(2, 10):
    poly, _ = additive_enhanced(parse_braid(2, [1] * n), z4)
    print("  n=%d: %s" % (n, poly))

# evaluating at u=1 recovers the counting invariant
poly, multiset = additive_enhanced(parse_braid(2, [1, 1, 1]), z4)
print("\ntrefoil additive:", poly, " at u=1:", poly.evaluate_u1())
print("multiset of subgroups (invariant factors):", multiset.entries())

# the s-enhancement projects labelings to the subquandle sX and records
# fiber data; coefficient-times-exponent sums recover the count
r4 = make_linear(4, 3, 2)
for spec in ("braid: 2: 1 1 1", "braid: 2: 1 1"):
    poly, _ = s_enhanced(parse_link(spec), r4)
    print("\ns-enhanced of %r: %s (recovers %d)"
          % (spec, poly, poly.coeff_exponent_sum()))
