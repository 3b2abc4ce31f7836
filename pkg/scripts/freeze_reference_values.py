#!/usr/bin/env python3
"""Independent literal evaluation of the reference constants frozen in the tests.

This script deliberately imports nothing from the package: every number is
recomputed here from the defining sums with math.comb, so the test fixtures
have a second, separate derivation.  Run it and compare against the
constants in tests/ whenever a frozen value looks suspicious.
"""
from math import comb


def dim_binom(top, n):
    return comb(top, n) if top >= n else 0


def base_term(n, alphas, betas):
    total = 1
    for x in alphas:
        for y in betas:
            total += dim_binom(x - y + n, n) + dim_binom(y - x + n, n)
    for x in alphas:
        for y in alphas:
            total -= dim_binom(x - y + n, n)
    for x in betas:
        for y in betas:
            total -= dim_binom(x - y + n, n)
    return total


def ell_h_pairs(n, alphas, betas):
    b = len(betas)
    c = len(alphas) - b + 1
    out = []
    for i in range(3, c + 1):
        ell_i = sum(alphas[: b + i - 1]) - sum(betas)
        out.append((ell_i, 2 * alphas[b + i - 2] - ell_i + n))
    return out


def section_count(n, alphas, betas, t):
    a, b = len(alphas), len(betas)
    ell = sum(alphas) - sum(betas)
    c = a - b + 1
    total = sum(dim_binom(n - y + t, n) for y in betas)
    total -= sum(dim_binom(n - x + t, n) for x in alphas)
    from itertools import combinations, combinations_with_replacement

    for s in range(c - 1):
        term = 0
        for ii in combinations(range(a), a - b - s - 1):
            for jj in combinations_with_replacement(range(b), s):
                top = n - ell + sum(alphas[i] for i in ii) + sum(betas[j] for j in jj) + t
                term += dim_binom(top, n)
        total += term if s % 2 == 0 else -term
    return total


if __name__ == "__main__":
    print("base term n=4 (1,1,1)/(0,0):", base_term(4, (1, 1, 1), (0, 0)))
    print("base term n=5 (1,1,1,1)/(0,0):", base_term(5, (1, 1, 1, 1), (0, 0)))
    print("base term n=4 (1,1,1,1)/(0,0,0):", base_term(4, (1, 1, 1, 1), (0, 0, 0)))
    print("ell/h pairs n=5 (1,1,1,1)/(0,0):", ell_h_pairs(5, (1, 1, 1, 1), (0, 0)))
    print("ell/h pairs n=6 (1,1,1,1,2)/(0,0):", ell_h_pairs(6, (1, 1, 1, 1, 2), (0, 0)))
    print(
        "f(t) table n=4 (1,1,1)/(0,0), t=-1..2:",
        [section_count(4, (1, 1, 1), (0, 0), t) for t in range(-1, 3)],
    )
