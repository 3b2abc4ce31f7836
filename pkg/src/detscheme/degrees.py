"""Degree data for a family of determinantal subvarieties.

The numeric input everywhere in this package is a triple
``(n, alphas, betas)``: the dimension ``n >= 2`` of the ambient projective
space and two non-decreasing integer sequences.  They prescribe a
``b x a`` matrix of homogeneous forms (entry ``(i, j)`` of degree
``alphas[j] - betas[i]``) whose maximal minors cut out a subvariety of
codimension ``c = a - b + 1``.

Values of this type are immutable and all operations on them are pure, so
they can be shared freely between threads or processes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


class DegreeDataError(ValueError):
    """Structurally malformed degree data (not a failed admissibility check)."""


class ConditionError(ValueError):
    """An operation was called on data that fails its admissibility condition."""


@dataclass(frozen=True)
class DegreeData:
    """Ambient dimension plus the column and row twist sequences.

    Sequences are stored sorted non-decreasingly; every formula in this
    package assumes sorted order.  The permutations that sorted the input
    are kept only so error messages can refer to the caller's positions.
    """

    n: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    alpha_order: tuple[int, ...] = field(init=False, compare=False, repr=False)
    beta_order: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        try:
            alphas = tuple(int(x) for x in self.alphas)
            betas = tuple(int(x) for x in self.betas)
            n = int(self.n)
        except (TypeError, ValueError) as exc:
            raise DegreeDataError(f"degree data must be integers: {exc}") from exc
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "alphas", tuple(sorted(alphas)))
        object.__setattr__(self, "betas", tuple(sorted(betas)))
        object.__setattr__(
            self, "alpha_order", tuple(sorted(range(len(alphas)), key=alphas.__getitem__))
        )
        object.__setattr__(
            self, "beta_order", tuple(sorted(range(len(betas)), key=betas.__getitem__))
        )
        self._check_structure()

    def _check_structure(self):
        if self.n < 2:
            raise DegreeDataError(f"ambient dimension n must be >= 2, got {self.n}")
        a, b = len(self.alphas), len(self.betas)
        if b == 0:
            raise DegreeDataError("need at least one row twist (b >= 1)")
        if a < b:
            raise DegreeDataError(
                f"need at least as many columns as rows (a={a} < b={b} gives codimension < 1)"
            )
        c = a - b + 1
        if c > self.n:
            raise DegreeDataError(
                f"codimension c={c} exceeds ambient dimension n={self.n}"
            )

    @property
    def a(self) -> int:
        return len(self.alphas)

    @property
    def b(self) -> int:
        return len(self.betas)

    @property
    def codim(self) -> int:
        return self.a - self.b + 1

    @property
    def dim_x(self) -> int:
        """Dimension of the determinantal subvariety, n - codim."""
        return self.n - self.codim

    @property
    def ell(self) -> int:
        """Total degree excess, sum(alphas) - sum(betas)."""
        return sum(self.alphas) - sum(self.betas)

    def is_homogeneous(self) -> bool:
        """True when all columns share one degree d >= 1 and all rows are 0."""
        return (
            len(set(self.alphas)) == 1
            and set(self.betas) == {0}
            and self.alphas[0] >= 1
        )

    def shifted(self, t: int) -> "DegreeData":
        """The same data with every twist shifted by the integer t."""
        return DegreeData(self.n, [x + t for x in self.alphas], [x + t for x in self.betas])

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "alphas": list(self.alphas), "betas": list(self.betas)})

    @classmethod
    def from_json(cls, text: str) -> "DegreeData":
        try:
            obj = json.loads(text)
            return cls(obj["n"], obj["alphas"], obj["betas"])
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise DegreeDataError(f"bad JSON degree data: {exc}") from exc

    def compact(self) -> str:
        """Canonical textual form, e.g. ``n=4 a=1,1,1 b=0,0``."""
        return "n={} a={} b={}".format(
            self.n,
            ",".join(map(str, self.alphas)),
            ",".join(map(str, self.betas)),
        )

    def __str__(self):
        return self.compact()


def parse_degree_data(text: str) -> DegreeData:
    """Parse either the compact form ``n=4 a=1,1,1 b=0,0`` or its JSON form."""
    text = text.strip()
    if text.startswith("{"):
        return DegreeData.from_json(text)
    fields = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("n", "a", "b") or key in fields:
            raise DegreeDataError(f"cannot parse degree data token {token!r}")
        fields[key] = value
    if set(fields) != {"n", "a", "b"}:
        raise DegreeDataError(f"degree data needs n=, a=, b=; got {text!r}")
    try:
        n = int(fields["n"])
        alphas = [int(x) for x in fields["a"].split(",") if x != ""]
        betas = [int(x) for x in fields["b"].split(",") if x != ""]
    except ValueError as exc:
        raise DegreeDataError(f"non-integer entry in degree data {text!r}") from exc
    return DegreeData(n, alphas, betas)


def validate_standard(d: DegreeData) -> bool:
    """Check the expected-codimension condition.

    True iff ``alphas[i] >= betas[i]`` for every row index i and the
    inequality is strict for at least one of them.  A generic matrix with
    these degrees then degenerates in the expected codimension.
    """
    b = d.b
    pairs = list(zip(d.alphas[:b], d.betas))
    return all(x >= y for x, y in pairs) and any(x > y for x, y in pairs)


def validate_main(d: DegreeData) -> bool:
    """Check the interlacing condition used by the stronger dimension results.

    True iff ``alphas[i] >= betas[i+1]`` for i = 1..b-1 and additionally
    ``alphas[i] > betas[i]`` for some i = 1..b.  For b = 1 only the strict
    clause applies.  This is checked literally and independently of
    :func:`validate_standard`; neither implies the other by fiat.
    """
    b = d.b
    interlaced = all(d.alphas[i] >= d.betas[i + 1] for i in range(b - 1))
    strict = any(d.alphas[i] > d.betas[i] for i in range(b))
    return interlaced and strict


@dataclass(frozen=True)
class DerivedInvariants:
    """Codimension, variety dimension and total degree excess."""

    c: int
    dim_x: int
    ell: int


def derive(d: DegreeData) -> DerivedInvariants:
    """Return ``(c, dim_x, ell)`` for admissible data.

    Requires :func:`validate_standard`; the numbers themselves are pure
    arithmetic (``dim_x + c == n`` always holds).
    """
    if not validate_standard(d):
        raise ConditionError(
            "degree data fails the expected-codimension condition "
            "(alpha_i >= beta_i for all i = 1..b, alpha_i > beta_i for some i)"
        )
    return DerivedInvariants(c=d.codim, dim_x=d.dim_x, ell=d.ell)
