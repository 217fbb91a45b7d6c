"""Numba-jitted implementations of the hot numeric kernels.

Same contracts as ``_kernels_numpy``. Parallel loops only ever write
disjoint output elements and every reduction runs sequentially inside a
single thread, so results are bit-identical for any thread count.
"""

import numpy as np
from numba import njit, prange

_JIT = dict(cache=True, nogil=True, parallel=True)


@njit(**_JIT)
def cosine_design(X, W, b):
    n, d = X.shape
    m = W.shape[0]
    out = np.empty((n, m))
    for i in prange(n):
        for j in range(m):
            t = 0.0
            for l in range(d):
                t += X[i, l] * W[j, l]
            out[i, j] = np.cos(t + b[j])
    return out


@njit(**_JIT)
def arccos_design(X, W, order):
    n, d = X.shape
    m = W.shape[0]
    out = np.empty((n, m))
    for i in prange(n):
        for j in range(m):
            t = 0.0
            for l in range(d):
                t += X[i, l] * W[j, l]
            if t > 0.0:
                h = 1.0
            elif t < 0.0:
                h = 0.0
            else:
                h = 0.5
            p = 1.0
            for _ in range(order):
                p *= t
            out[i, j] = p * h
    return out


@njit(**_JIT)
def score_cosine(X, y, W, b):
    n, d = X.shape
    m = W.shape[0]
    out = np.empty(m)
    for j in prange(m):
        s = 0.0
        c = 0.0
        for i in range(n):
            t = 0.0
            for l in range(d):
                t += X[i, l] * W[j, l]
            v = y[i] * np.cos(t + b[j])
            # Neumaier compensated accumulation
            tot = s + v
            if abs(s) >= abs(v):
                c += (s - tot) + v
            else:
                c += (v - tot) + s
            s = tot
        out[j] = (s + c) / n
    return out


@njit(**_JIT)
def score_arccos(X, y, W, order):
    n, d = X.shape
    m = W.shape[0]
    out = np.empty(m)
    for j in prange(m):
        s = 0.0
        c = 0.0
        for i in range(n):
            t = 0.0
            for l in range(d):
                t += X[i, l] * W[j, l]
            if t > 0.0:
                h = 1.0
            elif t < 0.0:
                h = 0.0
            else:
                h = 0.5
            p = 1.0
            for _ in range(order):
                p *= t
            v = y[i] * p * h
            tot = s + v
            if abs(s) >= abs(v):
                c += (s - tot) + v
            else:
                c += (v - tot) + s
            s = tot
        out[j] = (s + c) / n
    return out


@njit(**_JIT)
def kth_nn_distances(P, k):
    n, d = P.shape
    out = np.empty(n)
    for i in prange(n):
        dist = np.empty(n)
        for j in range(n):
            s = 0.0
            for l in range(d):
                t = P[i, l] - P[j, l]
                s += t * t
            dist[j] = np.sqrt(s)
        dist[i] = np.inf
        out[i] = np.partition(dist, k - 1)[k - 1]
    return out
