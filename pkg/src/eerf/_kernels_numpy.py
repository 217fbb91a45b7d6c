"""Pure-numpy implementations of the hot numeric kernels.

Fallback path used when numba is unavailable or when ``EERF_BACKEND=numpy``
is set. Each function here mirrors a jitted twin in ``_kernels_numba``;
``kernels`` picks one module at import time.

Score accumulation streams over fixed-size row chunks and combines the
per-chunk partial sums with Neumaier compensation, so the reduction order
is fixed regardless of array size or thread count.
"""

import numpy as np

_CHUNK = 4096


def cosine_design(X, W, b):
    """cos(x.w + b) for every row x and feature (w, b). Shape (N, M)."""
    return np.cos(X @ W.T + b)


def arccos_design(X, W, order):
    """(x.w)^order * H(x.w) with H the Heaviside step, H(0) = 0.5."""
    t = X @ W.T
    h = 0.5 + 0.5 * np.sign(t)
    if order == 0:
        return h
    return t ** order * h


def _compensated_chunk_mean(X, y, design_chunk):
    n = X.shape[0]
    total = None
    comp = None
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        part = y[start:stop] @ design_chunk(X[start:stop])
        if total is None:
            total = part
            comp = np.zeros_like(part)
            continue
        t = total + part
        comp += np.where(np.abs(total) >= np.abs(part),
                         (total - t) + part,
                         (part - t) + total)
        total = t
    return (total + comp) / n


def score_cosine(X, y, W, b):
    """Per-feature mean of y * cos(x.w + b) without materializing (N, M)."""
    return _compensated_chunk_mean(X, y, lambda Xc: np.cos(Xc @ W.T + b))


def score_arccos(X, y, W, order):
    """Per-feature mean of y * (x.w)^order * H(x.w)."""

    def chunk(Xc):
        t = Xc @ W.T
        h = 0.5 + 0.5 * np.sign(t)
        return h if order == 0 else t ** order * h

    return _compensated_chunk_mean(X, y, chunk)


def kth_nn_distances(P, k):
    """Euclidean distance from each row of P to its k-th nearest other row.

    Self-distances are excluded by index, so duplicate points still count
    as neighbors of each other.
    """
    n = P.shape[0]
    out = np.empty(n)
    block = 64
    for start in range(0, n, block):
        stop = min(start + block, n)
        diff = P[start:stop, None, :] - P[None, :, :]
        d = np.sqrt(np.sum(diff * diff, axis=2))
        for i in range(start, stop):
            row = d[i - start]
            row[i] = np.inf
            out[i] = np.partition(row, k - 1)[k - 1]
    return out
