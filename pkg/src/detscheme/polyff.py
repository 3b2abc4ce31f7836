"""Homogeneous polynomial arithmetic over a large prime field.

Coefficients are stored densely by graded piece: a polynomial of degree d
in n+1 variables is a vector indexed by the lex-ordered monomials of that
degree.  The graded oracles consume whole graded pieces, so the dense
layout feeds rank computations directly.

Polynomials, matrices and ideals are immutable after construction; the
only stateful object is the RNG inside :func:`random_matrix`, which is
confined to that call.  Instances can therefore be used freely from
concurrent workers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .degrees import DegreeData

DEFAULT_PRIME = 32003
SECOND_PRIME = 65537


def is_probable_prime(m: int) -> bool:
    """Deterministic Miller-Rabin for m < 3.3e24 (fixed witness set)."""
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """An odd prime modulus, large enough to behave generically at desk scale."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p <= 1000:
            raise ValueError(f"prime {self.p} rejected: the guard requires p > 1000")
        if not is_probable_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, x: int) -> int:
        return pow(x % self.p, -1, self.p)


@lru_cache(maxsize=256)
def monomials(n_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Lex-ordered (descending) exponent tuples of the given total degree."""
    if degree < 0:
        return ()
    if n_vars == 1:
        return ((degree,),)
    out = []
    for e0 in range(degree, -1, -1):
        for rest in monomials(n_vars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


@lru_cache(maxsize=256)
def monomial_index(n_vars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomials(n_vars, degree))}


def monomial_count(n_vars: int, degree: int) -> int:
    if degree < 0:
        return 0
    from math import comb

    return comb(degree + n_vars - 1, n_vars - 1)


@lru_cache(maxsize=512)
def mul_table(n_vars: int, d1: int, d2: int) -> np.ndarray:
    """Index of mono_i(d1) * mono_j(d2) inside degree d1+d2, shape (c1, c2)."""
    idx = monomial_index(n_vars, d1 + d2)
    m1 = monomials(n_vars, d1)
    m2 = monomials(n_vars, d2)
    out = np.empty((len(m1), len(m2)), dtype=np.int64)
    for i, e1 in enumerate(m1):
        for j, e2 in enumerate(m2):
            out[i, j] = idx[tuple(x + y for x, y in zip(e1, e2))]
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class HomogeneousPoly:
    """A homogeneous form: degree, number of variables, dense coefficient vector."""

    n_vars: int
    degree: int
    coeffs: np.ndarray
    p: int

    def __post_init__(self):
        want = monomial_count(self.n_vars, self.degree)
        if self.degree < 0:
            raise ValueError("no forms of negative degree; use None for zero markers")
        if len(self.coeffs) != want:
            raise ValueError(f"degree {self.degree} needs {want} coefficients")
        c = np.asarray(self.coeffs, dtype=np.int64) % self.p
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n_vars: int, degree: int, p: int) -> "HomogeneousPoly":
        return cls(n_vars, degree, np.zeros(monomial_count(n_vars, degree), dtype=np.int64), p)

    @classmethod
    def monomial(cls, n_vars: int, exponents, p: int) -> "HomogeneousPoly":
        exponents = tuple(exponents)
        deg = sum(exponents)
        c = np.zeros(monomial_count(n_vars, deg), dtype=np.int64)
        c[monomial_index(n_vars, deg)[exponents]] = 1
        return cls(n_vars, deg, c, p)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def _check_compat(self, other: "HomogeneousPoly", same_degree: bool):
        if self.n_vars != other.n_vars or self.p != other.p:
            raise ValueError("polynomials live in different rings")
        if same_degree and self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree} (sums must be graded)"
            )

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compat(other, same_degree=True)
        return HomogeneousPoly(self.n_vars, self.degree, (self.coeffs + other.coeffs) % self.p, self.p)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compat(other, same_degree=True)
        return HomogeneousPoly(self.n_vars, self.degree, (self.coeffs - other.coeffs) % self.p, self.p)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.n_vars, self.degree, (-self.coeffs) % self.p, self.p)

    def scale(self, scalar: int) -> "HomogeneousPoly":
        return HomogeneousPoly(
            self.n_vars, self.degree, self.coeffs * (scalar % self.p) % self.p, self.p
        )

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compat(other, same_degree=False)
        table = mul_table(self.n_vars, self.degree, other.degree)
        out = np.zeros(monomial_count(self.n_vars, self.degree + other.degree), dtype=np.int64)
        nz = np.nonzero(self.coeffs)[0]
        for i in nz:
            np.add.at(out, table[i], self.coeffs[i] * other.coeffs)
        return HomogeneousPoly(self.n_vars, self.degree + other.degree, out % self.p, self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return (
            self.n_vars == other.n_vars
            and self.degree == other.degree
            and self.p == other.p
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.n_vars, self.degree, self.p, self.coeffs.tobytes()))

    def evaluate(self, point) -> int:
        """Value at a point of F_p^{n_vars}."""
        point = [x % self.p for x in point]
        if len(point) != self.n_vars:
            raise ValueError(f"need {self.n_vars} coordinates, got {len(point)}")
        monos = monomials(self.n_vars, self.degree)
        total = 0
        for idx in np.nonzero(self.coeffs)[0]:
            term = int(self.coeffs[idx])
            for x, e in zip(point, monos[idx]):
                if e:
                    term = term * pow(x, e, self.p) % self.p
            total = (total + term) % self.p
        return total

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        monos = monomials(self.n_vars, self.degree)
        return [(monos[i], int(self.coeffs[i])) for i in np.nonzero(self.coeffs)[0]]

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for expo, coef in self.terms():
            factors = [str(coef)] if coef != 1 or not any(expo) else []
            for v, e in enumerate(expo):
                if e == 1:
                    factors.append(f"x{v}")
                elif e > 1:
                    factors.append(f"x{v}^{e}")
            parts.append("*".join(factors) if factors else str(coef))
        return " + ".join(parts)


@dataclass(frozen=True)
class PrimeFieldPolyMatrix:
    """A b x a matrix of forms realizing the prescribed degree pattern.

    Entry (i, j) is homogeneous of degree alphas[j] - betas[i]; entries with
    a negative prescribed degree are structurally zero and stored as None.
    """

    data: DegreeData
    field: PrimeField
    entries: tuple[tuple[HomogeneousPoly | None, ...], ...]
    seed: int | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        d = self.data
        if len(self.entries) != d.b or any(len(row) != d.a for row in self.entries):
            raise ValueError("entry grid does not match the degree data shape")
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                want = d.alphas[j] - d.betas[i]
                if want < 0:
                    if e is not None:
                        raise ValueError(f"entry ({i},{j}) must be the zero marker")
                elif e is None or e.degree != want:
                    raise ValueError(f"entry ({i},{j}) must have degree {want}")

    def entry(self, i: int, j: int) -> HomogeneousPoly | None:
        return self.entries[i][j]

    def evaluate(self, point) -> np.ndarray:
        """Numeric b x a matrix of entry values at a point."""
        out = np.zeros((self.data.b, self.data.a), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                out[i, j] = 0 if e is None else e.evaluate(point)
        return out

    def scale_column(self, j: int, scalar: int) -> "PrimeFieldPolyMatrix":
        rows = []
        for i, row in enumerate(self.entries):
            row = list(row)
            if row[j] is not None:
                row[j] = row[j].scale(scalar)
            rows.append(tuple(row))
        return PrimeFieldPolyMatrix(self.data, self.field, tuple(rows), self.seed)


def random_matrix(d: DegreeData, fieldp: PrimeField, seed: int) -> PrimeFieldPolyMatrix:
    """Sample a matrix with independent uniform coefficients, reproducibly.

    The same (data, field, seed) always yields the same matrix; entries of
    prescribed negative degree are the structural zero marker.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    rows = []
    for i in range(d.b):
        row = []
        for j in range(d.a):
            deg = d.alphas[j] - d.betas[i]
            if deg < 0:
                row.append(None)
                continue
            count = monomial_count(d.n + 1, deg)
            coeffs = rng.integers(0, fieldp.p, size=count, dtype=np.int64)
            row.append(HomogeneousPoly(d.n + 1, deg, coeffs, fieldp.p))
        rows.append(tuple(row))
    return PrimeFieldPolyMatrix(d, fieldp, tuple(rows), seed)


@dataclass(frozen=True)
class GradedIdeal:
    """Maximal minors with their degrees, aligned with column subsets.

    Zero minors are retained so generator k always corresponds to the k-th
    column subset in lexicographic order.
    """

    data: DegreeData
    field: PrimeField
    generators: tuple[HomogeneousPoly, ...]
    degrees: tuple[int, ...]
    column_subsets: tuple[tuple[int, ...], ...]

    @property
    def n_vars(self) -> int:
        return self.data.n + 1

    def to_json(self) -> str:
        gens = []
        for g, deg, cols in zip(self.generators, self.degrees, self.column_subsets):
            gens.append(
                {
                    "degree": deg,
                    "columns": list(cols),
                    "terms": [[list(e), c] for e, c in g.terms()],
                }
            )
        return json.dumps(
            {
                "n": self.data.n,
                "alphas": list(self.data.alphas),
                "betas": list(self.data.betas),
                "p": self.field.p,
                "generators": gens,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "GradedIdeal":
        obj = json.loads(text)
        d = DegreeData(obj["n"], obj["alphas"], obj["betas"])
        fieldp = PrimeField(obj["p"])
        gens, degs, cols = [], [], []
        for g in obj["generators"]:
            poly = HomogeneousPoly.zero(d.n + 1, g["degree"], fieldp.p)
            coeffs = poly.coeffs.copy()
            index = monomial_index(d.n + 1, g["degree"])
            for expo, c in g["terms"]:
                coeffs[index[tuple(expo)]] = c % fieldp.p
            gens.append(HomogeneousPoly(d.n + 1, g["degree"], coeffs, fieldp.p))
            degs.append(g["degree"])
            cols.append(tuple(g["columns"]))
        return cls(d, fieldp, tuple(gens), tuple(degs), tuple(cols))

    def to_text(self) -> str:
        """One generator per line in variables x0..xn, coefficients in [0, p)."""
        lines = [
            f"# ideal of maximal minors over F_{self.field.p}, variables x0..x{self.data.n}",
            f"# degree data: {self.data.compact()}",
        ]
        for g, deg, cols in zip(self.generators, self.degrees, self.column_subsets):
            lines.append(f"# columns {list(cols)} degree {deg}")
            lines.append(str(g))
        return "\n".join(lines) + "\n"


def maximal_minors(m: PrimeFieldPolyMatrix) -> GradedIdeal:
    """All C(a, b) maximal minors of the matrix, exactly.

    Each minor is computed by cofactor expansion (no polynomial division);
    sub-determinants are memoized and shared across the overlapping column
    subsets.  The minor for subset S is homogeneous of degree
    sum(alphas[S]) - sum(betas); identically zero minors are kept with
    their recorded degree so indexing stays aligned with the subsets.
    """
    d = m.data
    p = m.field.p
    n_vars = d.n + 1
    cache: dict[tuple[int, tuple[int, ...]], HomogeneousPoly | None] = {}

    def det(rows_up_to: int, col_subset: tuple[int, ...]) -> HomogeneousPoly | None:
        # expand along the last row; None encodes a vanishing sub-determinant
        key = (rows_up_to, col_subset)
        if key in cache:
            return cache[key]
        if rows_up_to == 0:
            one = HomogeneousPoly(n_vars, 0, np.array([1], dtype=np.int64), p)
            cache[key] = one
            return one
        i = rows_up_to - 1
        acc: HomogeneousPoly | None = None
        for pos, j in enumerate(col_subset):
            entry = m.entry(i, j)
            if entry is None or entry.is_zero():
                continue
            sub = det(i, col_subset[:pos] + col_subset[pos + 1 :])
            if sub is None or sub.is_zero():
                continue
            term = entry * sub
            if (i + pos) % 2:
                term = -term
            acc = term if acc is None else acc + term
        cache[key] = acc
        return acc

    gens, degs, subsets = [], [], []
    for cols in combinations(range(d.a), d.b):
        degree = sum(d.alphas[j] for j in cols) - sum(d.betas)
        value = det(d.b, cols)
        if value is None or value.is_zero():
            value = HomogeneousPoly.zero(n_vars, max(degree, 0), p)
        gens.append(value)
        degs.append(value.degree)
        subsets.append(cols)
    return GradedIdeal(d, m.field, tuple(gens), tuple(degs), tuple(subsets))
