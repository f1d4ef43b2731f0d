"""Bounded sumset kernels for the feasibility analysis.

``sumset(a, b, limit)`` returns the boolean vector ``s`` of length
``limit + 1`` with ``s[k]`` true iff ``a[i] and b[k - i]`` for some ``i``.

Two implementations exist and must agree bit for bit:

* ``numba``: bit-packed shifted OR compiled with ``@njit``.
* ``numpy``: index-pair sums for sparse inputs, slice-shifted OR when one
  side is sparse, FFT convolution otherwise.

``FLOORPLAN_KERNELS`` selects one (``numba``, ``numpy`` or ``auto``, the
default, which uses numba when it imports).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

PAIR_LIMIT = 1 << 20
SHIFT_LIMIT = 64


def _prepare(a: np.ndarray, b: np.ndarray, limit: int):
    a = np.asarray(a, dtype=bool)[: limit + 1]
    b = np.asarray(b, dtype=bool)[: limit + 1]
    return a, b


# --- numpy ------------------------------------------------------------------

def sumset_numpy(a: np.ndarray, b: np.ndarray, limit: int) -> np.ndarray:
    a, b = _prepare(a, b, limit)
    out = np.zeros(limit + 1, dtype=bool)
    ia, ib = np.flatnonzero(a), np.flatnonzero(b)
    if not len(ia) or not len(ib):
        return out
    if len(ia) > len(ib):
        a, b, ia, ib = b, a, ib, ia
    if len(ia) * len(ib) <= PAIR_LIMIT:
        sums = (ia[:, None] + ib[None, :]).ravel()
        out[sums[sums <= limit]] = True
    elif len(ia) <= SHIFT_LIMIT:
        for i in ia:
            n = min(len(b), limit + 1 - i)
            out[i:i + n] |= b[:n]
    else:
        size = 1 << int(len(a) + len(b) - 1).bit_length()
        conv = np.fft.irfft(np.fft.rfft(a.astype(np.float64), size)
                            * np.fft.rfft(b.astype(np.float64), size), size)
        hi = min(limit + 1, len(conv))
        out[:hi] = conv[:hi] > 0.5
    return out


# --- numba ------------------------------------------------------------------

if HAVE_NUMBA:
    @njit(cache=True)
    def _pack(x, nwords):
        words = np.zeros(nwords, np.uint64)
        for i in range(x.size):
            if x[i]:
                words[i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        return words

    @njit(cache=True)
    def _sumset_packed(ia, b, limit):
        nwords = (limit >> 6) + 1
        bw = _pack(b, nwords)
        out = np.zeros(nwords, np.uint64)
        for i in ia:
            q = i >> 6
            r = np.uint64(i & 63)
            if r == 0:
                for k in range(q, nwords):
                    out[k] |= bw[k - q]
            else:
                back = np.uint64(64) - r
                out[q] |= bw[0] << r
                for k in range(q + 1, nwords):
                    out[k] |= (bw[k - q] << r) | (bw[k - q - 1] >> back)
        res = np.zeros(limit + 1, np.bool_)
        for k in range(limit + 1):
            res[k] = (out[k >> 6] >> np.uint64(k & 63)) & np.uint64(1)
        return res


def sumset_numba(a: np.ndarray, b: np.ndarray, limit: int) -> np.ndarray:
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    a, b = _prepare(a, b, limit)
    ia, ib = np.flatnonzero(a), np.flatnonzero(b)
    if not len(ia) or not len(ib):
        return np.zeros(limit + 1, dtype=bool)
    if len(ia) > len(ib):
        ia, b = ib, a
    return _sumset_packed(ia.astype(np.int64), np.ascontiguousarray(b), limit)


def backend() -> str:
    choice = os.environ.get("FLOORPLAN_KERNELS", "auto").lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"FLOORPLAN_KERNELS must be auto, numba or numpy, not {choice!r}")
    if choice == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    return choice


def sumset(a: np.ndarray, b: np.ndarray, limit: int) -> np.ndarray:
    if backend() == "numba":
        return sumset_numba(a, b, limit)
    return sumset_numpy(a, b, limit)
