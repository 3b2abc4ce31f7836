"""Brute-force graded linear algebra oracles over a prime field.

Everything the closed-form side predicts is recomputed here from scratch on
a random matrix: Hilbert function values by exact rank, the Hilbert
polynomial by integer interpolation with verification points, the dimension
of the deformation space of the minor ideal (syzygy-compatible generator
perturbations), and the dimension of the matrix family modulo row/column
automorphisms via an explicit stabilizer computation.

Each oracle invocation is deterministic given (seed, prime, bounds); ranks
inside one invocation are computed in ascending degree and cached.  Distinct
invocations share nothing and may run in parallel.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

import numpy as np

from .degrees import ConditionError, DegreeData, validate_standard
from .dimension import family_dimension
from .linalg import Rref, RunningEchelon, matmul_modp, rank_modp
from .polyff import (
    GradedIdeal,
    HomogeneousPoly,
    PrimeField,
    PrimeFieldPolyMatrix,
    maximal_minors,
    monomial_count,
    monomials,
    mul_table,
    random_matrix,
)


class OracleError(RuntimeError):
    pass


class WindowError(OracleError):
    """Hilbert-function window did not verify: values off the fitted polynomial."""


class StabilizationError(OracleError):
    """Raising the syzygy degree bound by one changed the answer."""


class ResampleError(OracleError):
    """No usable random matrix found within the resampling budget."""


def default_hf_window(d: DegreeData) -> int:
    """Crude regularity surrogate: the sum of all column degrees."""
    return sum(d.alphas)


def default_syzygy_bound(degrees, d: DegreeData) -> int:
    return max(degrees) + max(d.alphas) + 2


class _GradedPieces:
    """Degreewise linear algebra on one graded ideal, with caching."""

    def __init__(self, ideal: GradedIdeal):
        self.ideal = ideal
        self.p = ideal.field.p
        self.n_vars = ideal.n_vars
        self._rref: dict[int, Rref] = {}
        self._rank: dict[int, int] = {}

    def dim(self, t: int) -> int:
        return monomial_count(self.n_vars, t)

    def product_rows(self, t: int) -> np.ndarray:
        """Matrix whose rows are g_k * m over monomials m of degree t - deg(g_k)."""
        blocks = []
        for g in self.ideal.generators:
            shift = t - g.degree
            if shift < 0:
                continue
            count = monomial_count(self.n_vars, shift)
            table = mul_table(self.n_vars, shift, g.degree)
            block = np.zeros((count, self.dim(t)), dtype=np.int64)
            block[np.arange(count)[:, None], table] = g.coeffs[None, :]
            blocks.append(block)
        if not blocks:
            return np.zeros((0, self.dim(t)), dtype=np.int64)
        return np.vstack(blocks)

    def rref(self, t: int) -> Rref:
        if t not in self._rref:
            self._rref[t] = Rref(self.product_rows(t), self.p)
            self._rank[t] = self._rref[t].rank
        return self._rref[t]

    def rank(self, t: int) -> int:
        if t not in self._rank:
            self._rank[t] = rank_modp(self.product_rows(t), self.p)
        return self._rank[t]

    def hilbert(self, t: int) -> int:
        if t < 0:
            raise ValueError("Hilbert function queried at negative degree")
        return self.dim(t) - self.rank(t)

    def quotient_monomials(self, t: int) -> np.ndarray:
        """Monomial indices forming the fixed complement basis of the degree-t piece."""
        return self.rref(t).free_cols

    def syzygy_space(self, t: int) -> tuple[np.ndarray, list[int]]:
        """Kernel basis of (c_k) -> sum c_k g_k in degree t, plus the block layout.

        Returns (basis rows, active generator indices); the columns of the
        basis are grouped by active generator, each block running over the
        monomials of degree t - deg(g_k).
        """
        active = [k for k, g in enumerate(self.ideal.generators) if g.degree <= t]
        cols = []
        for k in active:
            g = self.ideal.generators[k]
            shift = t - g.degree
            count = monomial_count(self.n_vars, shift)
            table = mul_table(self.n_vars, shift, g.degree)
            block = np.zeros((self.dim(t), count), dtype=np.int64)
            block[table.T, np.arange(count)[None, :]] = g.coeffs[:, None]
            cols.append(block)
        if not cols:
            return np.zeros((0, 0), dtype=np.int64), active
        matrix = np.hstack(cols)
        return Rref(matrix, self.p).nullspace(), active


def hilbert_function(ideal: GradedIdeal, t: int, field: PrimeField | None = None) -> int:
    """HF(S/I, t): monomial count minus the exact rank of the product rows."""
    if field is not None and field.p != ideal.field.p:
        raise ValueError("field does not match the ideal's field")
    return _GradedPieces(ideal).hilbert(t)


@dataclass(frozen=True)
class HilbertFit:
    """Integer interpolation of the Hilbert function on a trailing window.

    ``newton_diffs[j]`` is the j-th forward difference at the window start,
    so the fitted polynomial is sum_j newton_diffs[j] * C(t - start, j);
    ``fitted_degree`` is the top nonzero difference, which equals the
    leading coefficient times fitted_dim factorial.
    """

    window_start: int
    values: tuple[int, ...]
    check_values: tuple[int, ...]
    newton_diffs: tuple[int, ...]
    fitted_dim: int
    fitted_degree: int

    def predict(self, t: int) -> int:
        s = t - self.window_start
        return sum(c * comb(s, j) for j, c in enumerate(self.newton_diffs) if s >= j)

    @property
    def hf_table(self) -> tuple[tuple[int, int], ...]:
        window = [(self.window_start + i, v) for i, v in enumerate(self.values)]
        window += [
            (self.window_start + len(self.values) + i, v)
            for i, v in enumerate(self.check_values)
        ]
        return tuple(window)


def fit_hilbert_polynomial(
    ideal: GradedIdeal, expected_dim: int, window_start: int | None = None
) -> HilbertFit:
    """Interpolate the Hilbert polynomial and verify it on two extra points.

    Fits the unique polynomial of degree <= expected_dim through
    expected_dim + 1 consecutive Hilbert function values starting at
    ``window_start`` (default: sum of the column degrees), then checks the
    next two values lie on it.  A mismatch means the window started before
    the Hilbert function settled onto its polynomial (or the variety does
    not have the expected dimension) and raises WindowError rather than
    silently retrying.
    """
    if expected_dim < 0:
        raise ValueError("expected_dim must be non-negative")
    if window_start is None:
        window_start = default_hf_window(ideal.data)
    pieces = _GradedPieces(ideal)
    values = tuple(pieces.hilbert(window_start + i) for i in range(expected_dim + 1))
    checks = tuple(
        pieces.hilbert(window_start + expected_dim + 1 + i) for i in range(2)
    )
    diffs = [list(values)]
    while len(diffs[-1]) > 1:
        last = diffs[-1]
        diffs.append([y - x for x, y in zip(last, last[1:])])
    newton = tuple(level[0] for level in diffs)
    fitted_dim = max((j for j, c in enumerate(newton) if c != 0), default=0)
    fit = HilbertFit(
        window_start=window_start,
        values=values,
        check_values=checks,
        newton_diffs=newton,
        fitted_dim=fitted_dim,
        fitted_degree=newton[fitted_dim],
    )
    for offset, got in enumerate(checks):
        want = fit.predict(window_start + expected_dim + 1 + offset)
        if want != got:
            raise WindowError(
                f"Hilbert values left the fitted polynomial at t="
                f"{window_start + expected_dim + 1 + offset}: predicted {want}, got {got} "
                f"(window_start={window_start}; window too early or unexpected dimension)"
            )
    return fit


def tangent_space_dimension(
    ideal: GradedIdeal, bound: int | None = None, *, _return_trace: bool = False
):
    """Dimension of the space of syzygy-compatible generator perturbations.

    An admissible perturbation assigns to every generator g_k a class
    h_k in the degree-d_k piece of S/I such that, for every syzygy
    (c_k) of every internal degree D <= bound, sum_k c_k h_k lies in I.
    Syzygies in degree D are the kernel of the multiplication map
    (+)_k S_{D - d_k} -> S_D.  The unknowns h_k are coordinatized by the
    fixed monomial complement basis (column-echelon free columns), so the
    result is reproducible.

    After imposing degrees up to ``bound`` the computation re-checks at
    bound + 1 and raises StabilizationError if the answer moves.
    """
    pieces = _GradedPieces(ideal)
    p = pieces.p
    degrees = [g.degree for g in ideal.generators]
    if bound is None:
        bound = default_syzygy_bound(degrees, ideal.data)
    blocks = [pieces.quotient_monomials(dk) for dk in degrees]
    block_starts = np.cumsum([0] + [len(b) for b in blocks])
    total_unknowns = int(block_starts[-1])
    conditions = RunningEchelon(total_unknowns, p)

    def impose(D: int):
        quotient = pieces.rref(D)
        if not len(quotient.free_cols):
            return
        syz, active = pieces.syzygy_space(D)
        if not len(syz):
            return
        free_index = np.full(pieces.dim(D), -1, dtype=np.int64)
        free_index[quotient.free_cols] = np.arange(len(quotient.free_cols))
        r_free = quotient.rows[:, quotient.free_cols]
        hf = len(quotient.free_cols)
        for lo in range(0, len(syz), 64):
            batch = syz[lo : lo + 64]
            rows = []
            src = 0
            per_unknown = []
            for k in active:
                dk = degrees[k]
                count = monomial_count(pieces.n_vars, D - dk)
                block = batch[:, src : src + count]
                src += count
                if not len(blocks[k]):
                    continue
                table = mul_table(pieces.n_vars, D - dk, dk)
                for offset, u in enumerate(blocks[k]):
                    target = table[:, u]
                    piv_rows = quotient.row_of_col[target]
                    in_quot = piv_rows < 0
                    col = np.zeros((len(batch), hf), dtype=np.int64)
                    if in_quot.any():
                        col[:, free_index[target[in_quot]]] = block[:, in_quot]
                    if (~in_quot).any():
                        col = (
                            col
                            - matmul_modp(
                                block[:, ~in_quot], r_free[piv_rows[~in_quot]], p
                            )
                        ) % p
                    per_unknown.append((block_starts[k] + offset, col))
            if not per_unknown:
                continue
            stacked = np.zeros(
                (len(batch) * hf, total_unknowns), dtype=np.int64
            )
            for column, col in per_unknown:
                stacked[:, column] = col.reshape(-1)
            conditions.add(stacked)

    start = min(degrees) if degrees else 0
    for D in range(start, bound + 1):
        impose(D)
    dim_at_bound = total_unknowns - conditions.rank
    impose(bound + 1)
    dim_checked = total_unknowns - conditions.rank
    if dim_checked != dim_at_bound:
        raise StabilizationError(
            f"syzygy conditions not stable at bound {bound}: "
            f"dimension {dim_at_bound} at <= {bound} but {dim_checked} at <= {bound + 1}"
        )
    if _return_trace:
        return dim_checked, {"bound": bound, "recheck": bound + 1}
    return dim_checked


def _graded_map_blocks(sources, targets):
    """Unknown layout of a graded endomorphism: (row, col, degree) per block."""
    out = []
    for i, ti in enumerate(targets):
        for j, sj in enumerate(sources):
            out.append((i, j, sj - ti))
    return out


def stabilizer_dimension(m: PrimeFieldPolyMatrix) -> int:
    """Dimension of the pairs (u, v) of graded endomorphisms with phi.u = v.phi.

    u runs over endomorphisms of the source (an a x a grid of forms of
    degree alphas[j] - alphas[k], zero when negative), v over endomorphisms
    of the target; the pair (t*id, t*id) always solves, so the result is
    at least 1.  The action on the matrix side composes in the opposite
    order, but the solution dimension of the linear system is the same
    either way.
    """
    d = m.data
    p = m.field.p
    n_vars = d.n + 1
    u_blocks = [
        (k, j, deg)
        for (k, j, deg) in _graded_map_blocks(d.alphas, d.alphas)
        if deg >= 0
    ]
    v_blocks = [
        (i, mm, deg)
        for (i, mm, deg) in _graded_map_blocks(d.betas, d.betas)
        if deg >= 0
    ]
    u_sizes = [monomial_count(n_vars, deg) for (_, _, deg) in u_blocks]
    v_sizes = [monomial_count(n_vars, deg) for (_, _, deg) in v_blocks]
    unknowns = sum(u_sizes) + sum(v_sizes)
    u_start = dict(
        zip([(k, j) for (k, j, _) in u_blocks], np.cumsum([0] + u_sizes[:-1]))
    )
    v_start = dict(
        zip(
            [(i, mm) for (i, mm, _) in v_blocks],
            sum(u_sizes) + np.cumsum([0] + v_sizes[:-1]),
        )
    )
    u_deg = {(k, j): deg for (k, j, deg) in u_blocks}
    v_deg = {(i, mm): deg for (i, mm, deg) in v_blocks}

    rows = []
    for i in range(d.b):
        for j in range(d.a):
            eq_deg = d.alphas[j] - d.betas[i]
            if eq_deg < 0:
                continue
            n_eq = monomial_count(n_vars, eq_deg)
            row = np.zeros((n_eq, unknowns), dtype=np.int64)
            # + sum_k phi[i,k] * u[k,j]
            for k in range(d.a):
                entry = m.entry(i, k)
                if entry is None or (k, j) not in u_deg:
                    continue
                du = u_deg[(k, j)]
                table = mul_table(n_vars, entry.degree, du)
                start = u_start[(k, j)]
                for idx in np.nonzero(entry.coeffs)[0]:
                    np.add.at(
                        row,
                        (table[idx], np.arange(monomial_count(n_vars, du)) + start),
                        int(entry.coeffs[idx]),
                    )
            # - sum_m v[i,m] * phi[m,j]
            for mm in range(d.b):
                entry = m.entry(mm, j)
                if entry is None or (i, mm) not in v_deg:
                    continue
                dv = v_deg[(i, mm)]
                table = mul_table(n_vars, entry.degree, dv)
                start = v_start[(i, mm)]
                for idx in np.nonzero(entry.coeffs)[0]:
                    np.add.at(
                        row,
                        (table[idx], np.arange(monomial_count(n_vars, dv)) + start),
                        -int(entry.coeffs[idx]),
                    )
            rows.append(row % p)
    if not rows:
        return unknowns
    system = np.vstack(rows)
    return unknowns - rank_modp(system, p)


def endomorphism_dimension(twists, n: int) -> int:
    """Graded endomorphism dimension by enumerating monomial bases."""
    return sum(
        len(monomials(n + 1, x - y)) if x >= y else 0 for x in twists for y in twists
    )


def matrix_space_dimension(d: DegreeData) -> int:
    """Dimension of the space of matrices with the prescribed degrees."""
    return sum(
        len(monomials(d.n + 1, alpha - beta)) if alpha >= beta else 0
        for alpha in d.alphas
        for beta in d.betas
    )


def orbit_dimension(m: PrimeFieldPolyMatrix) -> int:
    """dim(matrix space) - dim(both automorphism groups) + stabilizer dimension.

    Automorphisms are open inside endomorphisms, so their dimensions agree;
    all counts come from graded-piece enumeration plus the exact stabilizer
    system.
    """
    d = m.data
    return (
        matrix_space_dimension(d)
        - endomorphism_dimension(d.alphas, d.n)
        - endomorphism_dimension(d.betas, d.n)
        + stabilizer_dimension(m)
    )


@dataclass(frozen=True)
class VerificationRecord:
    """Formula values vs oracle values for one sampled instance.

    The match flags are always recomputed from the stored numbers (see
    :meth:`matches`); they are never stored independently.
    """

    data: DegreeData
    prime: int
    seed: int
    hf_table: tuple[tuple[int, int], ...]
    fitted_dim: int
    fitted_degree: int
    tangent_dim: int
    stab_dim: int
    orbit_space_dim: int
    formula_dim: int
    syzygy_bound: int
    hf_window: int
    resamples: int

    @property
    def matches(self) -> dict[str, bool | None]:
        asserted_equal = self.data.dim_x >= 2 and self.data.codim >= 2
        return {
            "orbit_eq_formula": self.orbit_space_dim == self.formula_dim,
            "tangent_eq_formula": (
                self.tangent_dim == self.formula_dim if asserted_equal else None
            ),
            "tangent_eq_orbit": (
                self.tangent_dim == self.orbit_space_dim if asserted_equal else None
            ),
            "tangent_ge_formula": self.tangent_dim >= self.formula_dim,
            "fitted_dim_eq_expected": self.fitted_dim == self.data.dim_x,
        }

    @property
    def all_pass(self) -> bool:
        return all(v for v in self.matches.values() if v is not None)

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree_data": {
                    "n": self.data.n,
                    "alphas": list(self.data.alphas),
                    "betas": list(self.data.betas),
                },
                "prime": self.prime,
                "seed": self.seed,
                "hf_table": [list(x) for x in self.hf_table],
                "fitted_dim": self.fitted_dim,
                "fitted_degree": self.fitted_degree,
                "tangent_dim": self.tangent_dim,
                "stab_dim": self.stab_dim,
                "orbit_space_dim": self.orbit_space_dim,
                "formula_dim": self.formula_dim,
                "matches": self.matches,
                "bounds_used": {
                    "syzygy_bound": self.syzygy_bound,
                    "hf_window": self.hf_window,
                },
                "resamples": self.resamples,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationRecord":
        obj = json.loads(text)
        dd = obj["degree_data"]
        return cls(
            data=DegreeData(dd["n"], dd["alphas"], dd["betas"]),
            prime=obj["prime"],
            seed=obj["seed"],
            hf_table=tuple(tuple(x) for x in obj["hf_table"]),
            fitted_dim=obj["fitted_dim"],
            fitted_degree=obj["fitted_degree"],
            tangent_dim=obj["tangent_dim"],
            stab_dim=obj["stab_dim"],
            orbit_space_dim=obj["orbit_space_dim"],
            formula_dim=obj["formula_dim"],
            syzygy_bound=obj["bounds_used"]["syzygy_bound"],
            hf_window=obj["bounds_used"]["hf_window"],
            resamples=obj["resamples"],
        )


MAX_RESAMPLES = 10


def verify_instance(
    d: DegreeData,
    prime: int = 32003,
    seed: int = 0,
    syzygy_bound: int | None = None,
    hf_window: int | None = None,
) -> VerificationRecord:
    """Run the full oracle pipeline on one instance and collect the record.

    Samples a random matrix, takes its maximal minors, certifies the
    expected codimension through the Hilbert-polynomial fit, then computes
    the deformation-space and orbit-space dimensions.  Samples that are
    degenerate (all minors zero, or the fit does not certify the expected
    dimension) are redrawn with the next seed, at most MAX_RESAMPLES times.
    """
    if not validate_standard(d):
        raise ConditionError(f"{d} fails the expected-codimension condition")
    if d.dim_x < 1:
        raise ConditionError(f"oracle verification needs dim >= 1, got {d.dim_x}")
    fieldp = PrimeField(prime)
    last_window_error: WindowError | None = None
    for attempt in range(MAX_RESAMPLES + 1):
        used_seed = seed + attempt
        matrix = random_matrix(d, fieldp, used_seed)
        ideal = maximal_minors(matrix)
        if all(g.is_zero() for g in ideal.generators):
            continue
        try:
            fit = fit_hilbert_polynomial(ideal, d.dim_x, hf_window)
        except WindowError as exc:
            last_window_error = exc
            continue
        if fit.fitted_dim != d.dim_x:
            continue
        break
    else:
        message = f"no usable sample for {d} after {MAX_RESAMPLES + 1} attempts"
        if last_window_error is not None:
            raise ResampleError(f"{message}; last fit failure: {last_window_error}")
        raise ResampleError(message)

    tangent, trace = tangent_space_dimension(ideal, syzygy_bound, _return_trace=True)
    stab = stabilizer_dimension(matrix)
    orbit = orbit_dimension(matrix)
    return VerificationRecord(
        data=d,
        prime=prime,
        seed=used_seed,
        hf_table=fit.hf_table,
        fitted_dim=fit.fitted_dim,
        fitted_degree=fit.fitted_degree,
        tangent_dim=tangent,
        stab_dim=stab,
        orbit_space_dim=orbit,
        formula_dim=family_dimension(d).dim_y,
        syzygy_bound=trace["bound"],
        hf_window=fit.window_start,
        resamples=attempt,
    )
