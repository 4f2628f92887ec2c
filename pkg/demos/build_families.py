#!/usr/bin/env python3
"""Build both families of unimodal non-SI Gorenstein h-vectors.

Family one is parameterized by the socle degree e >= 6 and lands in
codimension e+4; family two fixes codimension 5 and produces one vector
for every socle degree >= 20.  Each is a trivial extension
H_i = h_i + h_{e-i} of an explicitly known level h-vector, and adding a
constant to the interior entries lifts the codimension further without
losing any of the properties.
"""
from hvectors import (
    codim5_family,
    first_difference,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    lift_codimension,
    socle_degree_family,
)

print("=" * 72)
print("Socle-degree family (codimension e + 4)")
print("=" * 72)
for e in range(6, 10):
    result = socle_degree_family(e)
    print(f"  e = {e}")
    print(f"    level      {result.level}")
    print(f"    gorenstein {result.gorenstein}")
    print(f"    codimension {result.gorenstein.codimension}, "
          f"SI violation predicted at difference step "
          f"{result.violation_step[0]}->{result.violation_step[1]}")
print()

print("=" * 72)
print("Codimension-5 family")
print("=" * 72)
for d, parity in ((10, "even"), (10, "odd"), (11, "even")):
    result = codim5_family(d, parity)
    g = result.gorenstein
    diff = first_difference(g.entries)
    print(f"  d = {d}, {parity}: socle degree {g.socle_degree}")
    print(f"    gorenstein {g}")
    print(f"    difference hits {diff[d - 1]} then {diff[d]} at degrees "
          f"{d - 1}, {d} — growth beyond the Macaulay bound")
print()

print("=" * 72)
print("Lifting the codimension")
print("=" * 72)
base = socle_degree_family(6).gorenstein
for a in range(4):
    lifted = lift_codimension(base, a)
    checks = (is_symmetric(lifted), is_unimodal(lifted),
              not is_si_sequence(lifted))
    print(f"  a = {a}: {lifted}  codim {lifted.codimension}  "
          f"symmetric/unimodal/non-SI = {checks}")
