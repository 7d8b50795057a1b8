"""Bit-packed GF(2) rank-spectrum kernels.

The enumeration oracle's hot loop walks every message of the extension
code, forms the codeword incrementally (addition in characteristic 2 is
XOR on the canonical encodings), packs the bit-planes of the entries
into machine words and computes the GF(2) rank by elimination on packed
rows.  Two implementations are provided: a numba kernel and a chunked
vectorized numpy fallback.  Setting RANKSPECTRA_NO_NUMBA forces the
fallback; both produce identical counts and both accept a subrange of
the message space so callers can partition the work across threads.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAS_NUMBA = False


def numba_enabled() -> bool:
    return HAS_NUMBA and not os.environ.get("RANKSPECTRA_NO_NUMBA")


def _spectrum_odometer(contrib, mtilde, start, stop, counts):
    """Reference implementation; also the numba kernel body.

    contrib[t, v, j] is the encoding of the j-th entry of v * row_t of the
    generator matrix; message index digits are big-endian in t.
    """
    k, S, n = contrib.shape
    digits = np.zeros(k, np.int64)
    acc = np.zeros((k + 1, n), np.uint64)
    basis = np.zeros(n, np.uint64)
    rem = start
    for t in range(k - 1, -1, -1):
        digits[t] = rem % S
        rem //= S
    for u in range(k):
        for j in range(n):
            acc[u + 1, j] = acc[u, j] ^ contrib[u, digits[u], j]
    one = np.uint64(1)
    for _ in range(stop - start):
        rank = 0
        for b in range(n):
            basis[b] = 0
        for i in range(mtilde):
            row = np.uint64(0)
            sh = np.uint64(i)
            for j in range(n):
                row |= ((acc[k, j] >> sh) & one) << np.uint64(j)
            while row != 0:
                h = 0
                r = row >> one
                while r != 0:
                    r >>= one
                    h += 1
                if basis[h] != 0:
                    row ^= basis[h]
                else:
                    basis[h] = row
                    rank += 1
                    break
        counts[rank] += 1
        t = k - 1
        while t >= 0:
            digits[t] += 1
            if digits[t] == S:
                digits[t] = 0
                t -= 1
            else:
                break
        if t < 0:
            break
        for u in range(t, k):
            for j in range(n):
                acc[u + 1, j] = acc[u, j] ^ contrib[u, digits[u], j]
    return counts


if HAS_NUMBA:
    _spectrum_numba = njit(cache=True, nogil=True)(_spectrum_odometer)


def _spectrum_numpy(contrib, mtilde, start, stop, counts, chunk=1 << 16):
    """Chunked vectorized fallback: batch codeword assembly and elimination."""
    k, S, n = contrib.shape
    one = np.uint64(1)
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        words = np.zeros((idx.size, n), dtype=np.uint64)
        for t in range(k):
            d = (idx // S ** (k - 1 - t)) % S
            words ^= contrib[t, d, :]
        rows = np.empty((idx.size, mtilde), dtype=np.uint64)
        for i in range(mtilde):
            r = np.zeros(idx.size, dtype=np.uint64)
            sh = np.uint64(i)
            for j in range(n):
                r |= ((words[:, j] >> sh) & one) << np.uint64(j)
            rows[:, i] = r
        # per-element GF(2) elimination, vectorized over the batch
        basis = np.zeros((idx.size, n), dtype=np.uint64)
        rank = np.zeros(idx.size, dtype=np.int64)
        for i in range(mtilde):
            row = rows[:, i].copy()
            for h in range(n - 1, -1, -1):
                has = ((row >> np.uint64(h)) & one).astype(bool)
                exists = basis[:, h] != 0
                red = has & exists
                row[red] ^= basis[red, h]
                ins = has & ~exists
                basis[ins, h] = row[ins]
                rank[ins] += 1
                row[ins] = 0
        counts += np.bincount(rank, minlength=n + 1)
    return counts


def spectrum_counts(contrib, mtilde: int, start: int = 0, stop: int | None = None,
                    use_numba: bool | None = None) -> np.ndarray:
    """Rank-weight histogram over a range of message indices.

    Returns an int64 vector of length n + 1; entry s counts messages whose
    codeword has GF(2) rank weight s.
    """
    contrib = np.ascontiguousarray(contrib, dtype=np.uint64)
    k, S, n = contrib.shape
    total = S**k
    if stop is None:
        stop = total
    if not (0 <= start <= stop <= total):
        raise ValueError("message index range out of bounds")
    counts = np.zeros(n + 1, dtype=np.int64)
    if start == stop:
        return counts
    if use_numba is None:
        use_numba = numba_enabled()
    if use_numba and HAS_NUMBA:
        return _spectrum_numba(contrib, mtilde, start, stop, counts)
    return _spectrum_numpy(contrib, mtilde, start, stop, counts)
