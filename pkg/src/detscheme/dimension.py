"""Closed-form dimension of the family of determinantal subvarieties.

For admissible degree data the locus swept out in the Hilbert scheme by
matrices with the prescribed twist pattern has an exactly computable
dimension: a base term counting matrix entries modulo row/column
automorphisms, plus one correction term per resolution tail step when the
codimension is at least 3.  Everything here is exact big-integer
combinatorics; no floats, no overflow.

All functions are pure and safe to evaluate concurrently.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

from .degrees import ConditionError, DegreeData, validate_standard


def binomial_dim(top: int, n: int) -> int:
    """Binomial coefficient C(top, n) under the dimension convention.

    Returns 0 whenever top < n (negative tops included), so that
    ``binomial_dim(x + n, n)`` is the dimension of the space of degree-x
    forms in n+1 variables for every integer x.
    """
    if n < 0:
        raise ValueError(f"lower index must be non-negative, got {n}")
    if top < n:
        return 0
    return comb(top, n)


def _require_standard(d: DegreeData):
    if not validate_standard(d):
        raise ConditionError(
            f"{d} fails the expected-codimension condition; "
            "the dimension formula does not apply"
        )


def hom_dimension(xs, ys, n: int) -> int:
    """Dimension of the space of graded maps between twist sequences xs -> ys.

    One block of forms of degree x - y per pair; empty blocks count zero.
    """
    return sum(binomial_dim(x - y + n, n) for x in xs for y in ys)


def base_dimension(d: DegreeData) -> int:
    """The base term of the family dimension.

    Counts maps in both directions between the two twist sequences, then
    subtracts both endomorphism algebras and adds 1 back for the global
    scalar: hom(A, B) + hom(B, A) - end(A) - end(B) + 1.
    """
    _require_standard(d)
    n = d.n
    return (
        hom_dimension(d.alphas, d.betas, n)
        + hom_dimension(d.betas, d.alphas, n)
        - hom_dimension(d.alphas, d.alphas, n)
        - hom_dimension(d.betas, d.betas, n)
        + 1
    )


def ell_h_sequences(d: DegreeData) -> list[tuple[int, int]]:
    """Partial degree sums and tail offsets driving the correction terms.

    For i = 3..c returns the pair (ell_i, h_{i-3}) where ell_i is the sum
    of the first b+i-1 column degrees minus all row degrees, and
    h_{i-3} = 2*alphas[b+i-1] - ell_i + n (1-based indexing).  Empty for
    codimension at most 2.
    """
    _require_standard(d)
    b, n = d.b, d.n
    beta_sum = sum(d.betas)
    out = []
    for i in range(3, d.codim + 1):
        ell_i = sum(d.alphas[: b + i - 1]) - beta_sum
        h = 2 * d.alphas[b + i - 2] - ell_i + n
        out.append((ell_i, h))
    return out


def k_terms(d: DegreeData) -> list[int]:
    """Correction terms K_3..K_c of the dimension formula (empty for c <= 2).

    K_{i+3} sums, over splittings r + s = i, signed binomials whose top is
    h_i plus a strictly increasing choice of r column degrees among the
    first b+i+1 and a weakly increasing choice of s row degrees:

        K_{i+3} = sum_{r+s=i} (-1)^(i-r) *
                  sum_{|I|=r, I subset of first b+i+1 columns, strictly increasing}
                  sum_{|J|=s multiset of rows}
                  C(h_i + alpha_I + beta_J, n)

    The enumeration is literal: combinations for the column indices,
    combinations with repetition for the row indices, no resummation.
    """
    _require_standard(d)
    b, n = d.b, d.n
    pairs = ell_h_sequences(d)
    out = []
    for i, (_ell, h) in enumerate(pairs):
        # i here matches the 0-based tail index: this is K_{i+3}
        total = 0
        for r in range(i + 1):
            s = i - r
            sign = -1 if (i - r) % 2 else 1
            alpha_pool = d.alphas[: b + i + 1]
            for alpha_idx in combinations(range(len(alpha_pool)), r):
                alpha_sum = sum(alpha_pool[j] for j in alpha_idx)
                for beta_idx in combinations_with_replacement(range(b), s):
                    beta_sum = sum(d.betas[j] for j in beta_idx)
                    total += sign * binomial_dim(h + alpha_sum + beta_sum, n)
        out.append(total)
    return out


@dataclass(frozen=True)
class DimensionReport:
    """All closed-form quantities for one degree datum.

    ``dim_y`` is always ``lambda_c + sum(k_terms)``; ``corollary_value``
    is filled only for homogeneous data (all column degrees equal to some
    d >= 1, all row degrees 0).  The canonical-class coefficients are
    ``canonical_h = ell - n - 1`` and ``canonical_p = a - b``.
    """

    lambda_c: int
    k_terms: tuple[int, ...]
    dim_y: int
    corollary_value: int | None
    canonical_h: int
    canonical_p: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "lambda_c": self.lambda_c,
                "k_terms": list(self.k_terms),
                "dim_y": self.dim_y,
                "corollary_value": self.corollary_value,
                "canonical": {"h": self.canonical_h, "p": self.canonical_p},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "DimensionReport":
        obj = json.loads(text)
        return cls(
            lambda_c=obj["lambda_c"],
            k_terms=tuple(obj["k_terms"]),
            dim_y=obj["dim_y"],
            corollary_value=obj["corollary_value"],
            canonical_h=obj["canonical"]["h"],
            canonical_p=obj["canonical"]["p"],
        )


def family_dimension(d: DegreeData) -> DimensionReport:
    """Assemble the full dimension report for admissible degree data.

    For codimension 1 the value still evaluates (base term only), but the
    stronger smoothness/birationality conclusions need c >= 2; callers
    presenting reports should flag that case.
    """
    lam = base_dimension(d)
    ks = tuple(k_terms(d))
    corollary = None
    if d.is_homogeneous() and d.codim >= 2 and d.dim_x >= 2:
        corollary = corollary_homogeneous(d.n, d.a, d.b, d.alphas[0])
    return DimensionReport(
        lambda_c=lam,
        k_terms=ks,
        dim_y=lam + sum(ks),
        corollary_value=corollary,
        canonical_h=d.ell - d.n - 1,
        canonical_p=d.a - d.b,
    )


def corollary_homogeneous(n: int, a: int, b: int, deg: int) -> int:
    """Family dimension for a homogeneous matrix: a*b*C(n+d, n) - a^2 - b^2 + 1.

    Valid for b <= a-1, d >= 1 and variety dimension n + b - a - 1 >= 2;
    outside that range the closed form is not backed by the theory and a
    ConditionError is raised.
    """
    if b < 1 or a < b + 1 or deg < 1:
        raise ConditionError(f"need 1 <= b <= a-1 and d >= 1, got a={a}, b={b}, d={deg}")
    if n + b - a - 1 < 2:
        raise ConditionError(
            f"homogeneous closed form needs variety dimension >= 2, got {n + b - a - 1}"
        )
    return a * b * binomial_dim(n + deg, n) - a * a - b * b + 1
