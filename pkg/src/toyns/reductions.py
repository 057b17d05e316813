"""Deterministic floating-point reductions.

All integrals, norms and means in this package go through pairwise_sum so
that results do not depend on worker count, chunking, or platform reduction
order.  The tree shape is a function of the element count only.
"""

import numpy as np


def pairwise_sum(values):
    """Sum a 1-D float64 array with a fixed pairwise (fold-in-half) tree.

    Element i is paired with element i + ceil(n/2) at every level, so the
    reduction order is fully determined by n.  Cost is O(n) with log2(n)
    vectorised passes.
    """
    a = np.ascontiguousarray(values, dtype=np.float64).ravel()
    n = a.size
    if n == 0:
        return 0.0
    a = a.copy()
    while n > 1:
        m = (n + 1) // 2
        k = n - m
        a[:k] = a[:k] + a[m : m + k]
        n = m
    return float(a[0])


def pairwise_mean(values):
    """Deterministic arithmetic mean built on pairwise_sum."""
    a = np.asarray(values)
    if a.size == 0:
        raise ValueError("mean of empty array")
    return pairwise_sum(a) / a.size


def trapezoid(samples, times):
    """Trapezoidal rule over sample times, accumulated in ascending order."""
    samples = np.asarray(samples, dtype=np.float64)
    times = np.asarray(times, dtype=np.float64)
    if samples.shape != times.shape:
        raise ValueError("samples and times must have matching shapes")
    total = 0.0
    for k in range(len(times) - 1):
        total += 0.5 * (samples[k] + samples[k + 1]) * (times[k + 1] - times[k])
    return total
