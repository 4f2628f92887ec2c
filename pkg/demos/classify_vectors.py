#!/usr/bin/env python3
"""Classify a handful of h-vectors and show where each predicate fails.

The five predicates build on one another: an O-sequence obeys Macaulay's
growth bound, a differentiable sequence has an O-sequence as its first
difference, and an SI-sequence is symmetric with a differentiable first
half.  SI implies unimodal, but the converse fails — that gap is exactly
what the constructed families below live in.
"""
from hvectors import (
    HVector,
    binomial_expansion,
    differentiability_violation,
    first_difference,
    first_half,
    is_differentiable,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_bound,
    si_violation,
)

SAMPLES = [
    ("polynomial ring slice", (1, 3, 6, 10)),
    ("SI Gorenstein", (1, 3, 3, 1)),
    ("unimodal non-SI Gorenstein", (1, 10, 14, 20, 14, 10, 1)),
    ("lifted variant", (1, 12, 16, 22, 16, 12, 1)),
    ("not unimodal", (1, 13, 12, 13, 1)),
    ("not an O-sequence", (1, 2, 4)),
]

print("=" * 72)
print("Macaulay bound basics")
print("=" * 72)
for n, i in ((3, 1), (4, 2), (6, 2), (9, 9)):
    expansion = binomial_expansion(n, i)
    terms = " + ".join(f"C({m},{k})" for m, k in expansion.terms)
    print(f"  {n} = {terms}  (index {i})  ->  bound {macaulay_bound(n, i)}")
print()

print("=" * 72)
print("Classification")
print("=" * 72)
for label, entries in SAMPLES:
    h = HVector(entries)
    flags = [
        "O-seq" if is_o_sequence(h) else "-",
        "sym" if is_symmetric(h) else "-",
        "unim" if is_unimodal(h) else "-",
        "diff" if is_differentiable(h) else "-",
        "SI" if is_si_sequence(h) else "-",
    ]
    print(f"  {label:<28} {str(h):<28} [{' '.join(flags)}]")
    violation = si_violation(h)
    if violation is not None and is_symmetric(h) and is_unimodal(h):
        diff = first_difference(first_half(h).entries)
        print(f"    first-half difference {diff}: "
              f"{violation.kind} at index {violation.index} "
              f"(bound {macaulay_bound(diff[violation.index], violation.index)})")
print()

print("The third vector is symmetric and unimodal, yet its first-half")
print("difference (1,9,4,6) tries to grow 4 -> 6 in degree 2 -> 3 while the")
print("Macaulay bound for 4 in degree 2 is only 5 — so it is not SI even")
print("though it is a genuine Gorenstein h-vector.")
diff_violation = differentiability_violation(HVector((1, 10, 14, 20)))
print(f"differentiability violation of the first half: {diff_violation}")
