import numpy as np
import pytest

from detscheme.linalg import (
    Rref,
    RunningEchelon,
    matmul_modp,
    nullspace_modp,
    rank_modp,
)


def rref_reference(a, p):
    """Plain object-dtype Gauss-Jordan, the trusted slow path."""
    a = a.astype(object) % p
    m, n = a.shape
    piv = []
    pr = 0
    for c in range(n):
        if pr >= m:
            break
        nz = [i for i in range(pr, m) if a[i, c] % p]
        if not nz:
            continue
        i = nz[0]
        a[[pr, i]] = a[[i, pr]]
        a[pr] = a[pr] * pow(int(a[pr, c]), -1, p) % p
        for other in range(m):
            if other != pr and a[other, c]:
                a[other] = (a[other] - a[other, c] * a[pr]) % p
        piv.append(c)
        pr += 1
    return a[: len(piv)].astype(np.int64), piv


@pytest.mark.parametrize("p", [3, 101, 32003, 65537])
def test_randomized_against_reference(p, rng):
    for _ in range(30):
        m = int(rng.integers(1, 45))
        n = int(rng.integers(1, 45))
        r = int(rng.integers(0, min(m, n) + 1))
        left = rng.integers(0, p, size=(m, r))
        right = rng.integers(0, p, size=(r, n))
        a = (left @ right % p).astype(np.int64)
        want_rows, want_piv = rref_reference(a.copy(), p)
        rr = Rref(a, p)
        assert rank_modp(a, p) == len(want_piv)
        assert list(rr.pivot_cols) == want_piv
        assert np.array_equal(rr.rows, want_rows)


def test_multi_panel_shapes(rng):
    p = 32003
    left = rng.integers(0, p, size=(700, 320))
    right = rng.integers(0, p, size=(320, 600))
    a = (left @ right % p).astype(np.int64)
    rr = Rref(a, p)
    assert rr.rank == 320
    kernel = rr.nullspace()
    assert kernel.shape == (600 - 320, 600)
    assert not np.any(matmul_modp(a, kernel.T % p, p))


def test_nullspace_identities(rng):
    p = 32003
    a = rng.integers(0, p, size=(8, 20)).astype(np.int64)
    kernel = nullspace_modp(a, p)
    assert kernel.shape[0] == 20 - rank_modp(a, p)
    assert not np.any(matmul_modp(a, kernel.T, p))


def test_zero_and_empty_matrices():
    p = 32003
    assert rank_modp(np.zeros((4, 5), dtype=np.int64), p) == 0
    assert rank_modp(np.zeros((0, 5), dtype=np.int64), p) == 0
    kernel = nullspace_modp(np.zeros((3, 4), dtype=np.int64), p)
    assert kernel.shape == (4, 4)


def test_reduce_mod_rowspace(rng):
    p = 101
    rows = rng.integers(0, p, size=(3, 10)).astype(np.int64)
    rr = Rref(rows, p)
    combos = rng.integers(0, p, size=(5, 3)) @ rows % p
    assert not np.any(rr.reduce_mod_rowspace(combos))
    # vectors outside the row space reduce to nonzero coordinates
    outside = rng.integers(0, p, size=(1, 10))
    reduced = rr.reduce_mod_rowspace(outside)
    assert reduced.shape == (1, 10 - rr.rank)


def test_huge_prime_fallback(rng):
    # beyond the float64 window: the int64 reference path must engage
    p = (1 << 31) - 1
    left = rng.integers(0, p, size=(12, 5))
    right = rng.integers(0, p, size=(5, 9))
    a = (left @ right % p).astype(np.int64)
    want_rows, want_piv = rref_reference(a.copy(), p)
    rr = Rref(a, p)
    assert list(rr.pivot_cols) == want_piv
    assert np.array_equal(rr.rows, want_rows)
    assert rank_modp(a, p) == len(want_piv)


def test_running_echelon_matches_batch(rng):
    p = 32003
    total = rng.integers(0, p, size=(300, 25)).astype(np.int64)
    running = RunningEchelon(25, p)
    for lo in range(0, 300, 37):
        running.add(total[lo : lo + 37])
    assert running.rank == rank_modp(total, p)
    # a tall batch takes the transpose-selection path
    tall = RunningEchelon(10, p)
    tall.add(rng.integers(0, p, size=(500, 10)).astype(np.int64))
    assert tall.rank == 10
