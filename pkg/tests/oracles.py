"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library's own code paths: monomial
enumeration is reimplemented here, and ranks are computed by plain
rational Gaussian elimination instead of fraction-free elimination.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb


def descending_monomials(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    if num_vars == 1:
        return [(degree,)]
    out = []
    for head in range(degree, -1, -1):
        out.extend(
            (head, *tail) for tail in descending_monomials(num_vars - 1, degree - head)
        )
    return out


def lex_segment_growth(n: int, i: int) -> int:
    """Maximal growth of an n-dimensional degree-i component, by brute force.

    Take the n lex-smallest degree-i monomials in the fewest variables that
    hold n of them, and count the degree-(i+1) monomials all of whose
    degree-i divisors belong to that segment.
    """
    num_vars = 1
    while comb(num_vars - 1 + i, i) < n:
        num_vars += 1
    ordered = descending_monomials(num_vars, i)
    standard = set(ordered[len(ordered) - n:])
    count = 0
    for mono in descending_monomials(num_vars, i + 1):
        good = True
        for var, exponent in enumerate(mono):
            if exponent:
                divisor = list(mono)
                divisor[var] -= 1
                if tuple(divisor) not in standard:
                    good = False
                    break
        if good:
            count += 1
    return count


def fraction_rank(rows) -> int:
    """Rank by ordinary Gaussian elimination over the rationals."""
    matrix = [[Fraction(v) for v in row] for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((k for k in range(r, n_rows) if matrix[k][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = Fraction(1) / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for k in range(r + 1, n_rows):
            f = matrix[k][c]
            if f:
                matrix[k] = [v - f * w for v, w in zip(matrix[k], matrix[r])]
        r += 1
    return r
