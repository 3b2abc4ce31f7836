"""Exact dense linear algebra over a prime field.

Matrices are stored as float64 arrays holding exact integers.  With p below
2**21 and desk-scale ranks, every intermediate value stays well inside the
2**53 window where float64 arithmetic is exact, so elimination can defer
mod-p reductions on the trailing block entirely: only pivot rows and factor
columns are reduced, and the bulk of the work runs as BLAS rank-k updates.
Values are kept as centered residues in [-p/2, p/2] while eliminating.

For primes too large for the float64 window a plain int64 per-pivot path is
used instead (correct, much slower).

Nothing here is randomized; given the same matrix and prime the pivot
choices and outputs are identical on every run.
"""
from __future__ import annotations

import numpy as np

_PANEL = 256


def _capacity_ok(m: int, n: int, p: int) -> bool:
    # worst accumulated magnitude: (rank + 2 panels) * (p/2)^2, keep 8x margin
    bound = (min(m, n) + 2 * _PANEL) * (p / 2.0) ** 2
    return bound < 2.0**50


def _reduce_centered(a: np.ndarray, p: float) -> np.ndarray:
    """Exact reduction of integer-valued float64 data to residues in [-p/2, p/2]."""
    q = np.rint(a * (1.0 / p))
    return a - q * p


def _to_nonneg(a: np.ndarray, p: float) -> np.ndarray:
    """Map centered residues to [0, p) in place."""
    np.add(a, p, out=a, where=a < 0)
    return a


def _prepare(a, p: int) -> np.ndarray:
    raw = np.asarray(a)
    if raw.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if np.issubdtype(raw.dtype, np.integer):
        return np.array(raw % p, dtype=np.float64, order="C")
    return np.array(raw, dtype=np.float64, order="C", copy=True)


def matmul_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) mod p for reduced integer matrices, BLAS-backed when safe."""
    inner = a.shape[-1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if inner * (p / 2.0) ** 2 < 2.0**52:
        af = _reduce_centered(np.asarray(a, dtype=np.float64), float(p))
        bf = _reduce_centered(np.asarray(b, dtype=np.float64), float(p))
        out = _reduce_centered(af @ bf, float(p))
        return _to_nonneg(out, float(p)).astype(np.int64)
    return (np.asarray(a, dtype=object) @ np.asarray(b, dtype=object) % p).astype(
        np.int64
    )


def _unit_lower_inverse(strict_lower: np.ndarray, inv_diag: list[int], p: int) -> np.ndarray:
    """Invert (D + L) mod p with L strictly lower triangular, D = diag(inv_diag)^-1.

    Returns float64 entries in [0, p); k is at most the panel size, so the
    forward substitution below is cheap.
    """
    k = len(inv_diag)
    lower = np.asarray(
        _to_nonneg(_reduce_centered(strict_lower[:k, :k].copy(), float(p)), float(p)),
        dtype=np.int64,
    )
    out = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        row = np.zeros(k, dtype=np.int64)
        row[j] = 1
        if j:
            row = (row - lower[j, :j] @ out[:j]) % p
        out[j] = row * inv_diag[j] % p
    return out.astype(np.float64)


def row_echelon_modp(a: np.ndarray, p: int) -> list[int]:
    """In-place forward elimination of a float64 matrix mod p.

    Returns the pivot columns in order.  On return rows 0..r-1 are the
    echelon rows, fully reduced to [0, p) with unit pivots; rows below are
    zero mod p (their stored values are not cleaned).
    """
    if not _capacity_ok(*a.shape, p):
        raise ValueError(f"prime {p} too large for the float64 elimination window")
    m, n = a.shape
    pf = float(p)
    piv_cols: list[int] = []
    pr = 0
    col = 0
    while col < n and pr < m:
        cend = min(col + _PANEL, n)
        width = cend - col
        # work on a contiguous copy of the panel slab; columns of the strided
        # parent view would miss cache on every element
        slab = np.ascontiguousarray(a[pr:, col:cend])
        factors = np.zeros_like(slab)
        inv_scales: list[int] = []
        local_cols: list[int] = []
        k = 0
        for lc in range(width):
            if k >= slab.shape[0]:
                break
            colv = _reduce_centered(slab[k:, lc], pf)
            slab[k:, lc] = colv
            nz = np.nonzero(colv)[0]
            if nz.size == 0:
                continue
            i = k + int(nz[0])
            if i != k:
                slab[[k, i], :] = slab[[i, k], :]
                factors[[k, i], :] = factors[[i, k], :]
                # rows left of the panel are exact zeros for both, so swapping
                # the trailing parts keeps the full rows consistent
                a[[pr + k, pr + i], cend:] = a[[pr + i, pr + k], cend:]
            inv = pow(int(slab[k, lc]) % p, -1, p)
            slab[k, lc:] = _reduce_centered(
                _reduce_centered(slab[k, lc:], pf) * float(inv), pf
            )
            below = slab[k + 1 :, lc].copy()
            slab[k + 1 :, lc] = 0.0
            if lc + 1 < width:
                slab[k + 1 :, lc + 1 :] -= np.outer(below, slab[k, lc + 1 :])
            factors[k + 1 :, k] = below
            inv_scales.append(inv)
            local_cols.append(col + lc)
            k += 1
        a[pr:, col:cend] = slab
        if k and cend < n:
            # The slab phase computed row_j_final = inv_j * (row_j_raw -
            # sum_{i<j} factors[j,i] * row_i_final) on panel columns; apply the
            # same transform to the trailing columns as one triangular inverse
            # plus one GEMM, then a rank-k update of everything below.
            tinv = _unit_lower_inverse(factors[:k, :k], inv_scales, p)
            raw = _reduce_centered(a[pr : pr + k, cend:], pf)
            settled = _reduce_centered(tinv @ raw, pf)
            a[pr : pr + k, cend:] = settled
            lower = factors[k:, :k]
            if lower.size:
                a[pr + k :, cend:] -= lower @ settled
        piv_cols.extend(local_cols)
        pr += k
        col = cend
    r = len(piv_cols)
    if r:
        a[:r] = _to_nonneg(_reduce_centered(a[:r], pf), pf)
    return piv_cols


def _backward_eliminate(a: np.ndarray, piv_cols: list[int], p: int) -> None:
    """Turn echelon rows 0..r-1 of a into reduced row echelon form, in place.

    Processes pivot blocks right to left; rows above a block accumulate
    unreduced exact updates, bounded by rank * (p/2)^2 (capacity-checked).
    """
    pf = float(p)
    r = len(piv_cols)
    hi = r
    while hi > 0:
        lo = max(hi - _PANEL, 0)
        # clean the block against itself, bottom-up
        for j in range(hi - 1, lo, -1):
            a[j] = _reduce_centered(a[j], pf)
            f = _reduce_centered(a[lo:j, piv_cols[j]].copy(), pf)
            if np.any(f):
                a[lo:j] -= np.outer(f, a[j])
        a[lo:hi] = _reduce_centered(a[lo:hi], pf)
        if lo:
            cols = [piv_cols[j] for j in range(lo, hi)]
            f = _reduce_centered(a[:lo, cols], pf)
            a[:lo] -= f @ a[lo:hi]
        hi = lo
    if r:
        a[:r] = _to_nonneg(_reduce_centered(a[:r], pf), pf)


def _rref_int64(a: np.ndarray, p: int) -> list[int]:
    """Reference-quality RREF for primes beyond the float64 window."""
    m, n = a.shape
    a %= p
    piv_cols: list[int] = []
    pr = 0
    for c in range(n):
        if pr >= m:
            break
        nz = np.nonzero(a[pr:, c])[0]
        if nz.size == 0:
            continue
        i = pr + int(nz[0])
        if i != pr:
            a[[pr, i]] = a[[i, pr]]
        a[pr] = a[pr] * pow(int(a[pr, c]), -1, p) % p
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != pr]
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, c], a[pr])) % p
        piv_cols.append(c)
        pr += 1
    return piv_cols


class Rref:
    """Reduced row echelon form of an integer matrix mod p.

    ``rows`` holds the rank many nonzero rows (int64, entries in [0, p)),
    ``pivot_cols`` their leading columns, ``free_cols`` the complement.
    """

    def __init__(self, a, p: int):
        self.p = int(p)
        raw = np.asarray(a)
        if raw.ndim != 2:
            raise ValueError("expected a 2-d matrix")
        self.n_cols = raw.shape[1]
        if _capacity_ok(*raw.shape, self.p):
            af = _prepare(raw, self.p)
            piv = row_echelon_modp(af, self.p)
            _backward_eliminate(af, piv, self.p)
            rows = af[: len(piv)].astype(np.int64)
        else:
            ai = np.array(raw, dtype=np.int64, copy=True)
            piv = _rref_int64(ai, self.p)
            rows = ai[: len(piv)]
        self.pivot_cols = np.asarray(piv, dtype=np.int64)
        in_piv = np.zeros(self.n_cols, dtype=bool)
        if len(piv):
            in_piv[self.pivot_cols] = True
        self.free_cols = np.nonzero(~in_piv)[0]
        self.rows = rows
        # column -> pivot row index, -1 on free columns
        self.row_of_col = np.full(self.n_cols, -1, dtype=np.int64)
        if len(piv):
            self.row_of_col[self.pivot_cols] = np.arange(len(piv))

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    @property
    def nullity(self) -> int:
        return self.n_cols - self.rank

    def nullspace(self) -> np.ndarray:
        """Basis of the right kernel as rows of a (nullity x n_cols) array."""
        free = self.free_cols
        basis = np.zeros((len(free), self.n_cols), dtype=np.int64)
        if len(free):
            basis[np.arange(len(free)), free] = 1
            if self.rank:
                basis[:, self.pivot_cols] = (-self.rows[:, free].T) % self.p
        return basis

    def reduce_mod_rowspace(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of vectors (rows of v) in the free-column quotient basis."""
        v = np.atleast_2d(np.asarray(v, dtype=np.int64)) % self.p
        out = v[:, self.free_cols].copy()
        if self.rank and len(self.free_cols):
            correction = matmul_modp(v[:, self.pivot_cols], self.rows[:, self.free_cols], self.p)
            out = (out - correction) % self.p
        return out


def rank_modp(a, p: int) -> int:
    """Exact rank of an integer matrix mod p."""
    raw = np.asarray(a)
    if raw.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if raw.size == 0:
        return 0
    if not _capacity_ok(*raw.shape, p):
        ai = np.array(raw, dtype=np.int64, copy=True)
        return len(_rref_int64(ai, p))
    af = _prepare(raw, p)
    if af.shape[0] > 1.5 * af.shape[1]:
        # forward elimination cost scales with the longer side; transpose pays
        af = np.ascontiguousarray(af.T)
    return len(row_echelon_modp(af, p))


def nullspace_modp(a, p: int) -> np.ndarray:
    """Basis of {x : a @ x == 0 mod p} as rows; shape (nullity, n_cols)."""
    return Rref(a, p).nullspace()


class RunningEchelon:
    """Incrementally row-reduce batches of constraints over a fixed column set.

    Used to accumulate linear conditions whose total rank is small compared
    to the number of rows produced; batches are folded in as they arrive.
    """

    def __init__(self, n_cols: int, p: int):
        self.p = int(p)
        self.n_cols = int(n_cols)
        self._rows = np.zeros((0, n_cols), dtype=np.int64)

    def add(self, rows: np.ndarray) -> None:
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int64)) % self.p
        rows = rows[np.any(rows, axis=1)]
        if not rows.size:
            return
        if rows.shape[0] > 4 * self.n_cols:
            # a tall stack has rank <= n_cols; pick an independent row subset
            # cheaply by eliminating the transpose (pivot columns of the
            # transpose are independent rows of the stack)
            keep = row_echelon_modp(_prepare(rows.T, self.p), self.p)
            rows = rows[keep]
        stacked = np.vstack([self._rows, rows])
        self._rows = Rref(stacked, self.p).rows

    @property
    def rank(self) -> int:
        return len(self._rows)
