#!/usr/bin/env python3
"""Reproduce the knot/link value tables from the shipped diagram corpus.

The corpus in tsracks/data/links.txt holds PD codes for prime knots to
eight crossings and prime links to seven crossings.  Grouping links by
their additive enhancement over the Alexander quandle Z_12 (t=11, s=2)
splits the table into the classical rows; the coefficientwise partial
order on the polynomials then obstructs quandle surjections between
knots.
"""

from collections import defaultdict

from tsracks import (
    additive_enhanced,
    load_corpus,
    make_linear,
    order_compare,
    s_enhanced,
)

corpus = load_corpus()
z12 = make_linear(12, 11, 2)
r4 = make_linear(4, 3, 2)

print("additive enhancement over Z_12 (t=11, s=2):")
rows = defaultdict(list)
values = {}
for name, diagram in corpus.items():
    poly, _ = additive_enhanced(diagram, z12)
    rows[str(poly)].append(name)
    values[name] = poly
for value, names in sorted(rows.items(), key=lambda kv: sorted(kv[1])):
    print("  %-42s %s" % (value, ", ".join(sorted(names))))

print("\nknot ordering obstructions (weak coefficientwise order):")
for a, b in (("4_1", "3_1"), ("3_1", "8_18"), ("L6a1", "L6a4")):
    rel = order_compare(values[a], values[b])
    print("  %s vs %s: %s" % (a, b, rel))

print("\ns-enhancement over Z_4 (t=3, s=2), links only:")
rows = defaultdict(list)
for name, diagram in corpus.items():
    if not name.startswith("L"):
        continue
    poly, _ = s_enhanced(diagram, r4)
    rows[str(poly)].append(name)
for value, names in sorted(rows.items(), key=lambda kv: sorted(kv[1])):
    print("  %-22s %s" % (value, ", ".join(sorted(names))))
print("(every knot in the corpus gives 2u^2 with this rack)")
