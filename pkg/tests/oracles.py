"""Independent reference computations used to freeze and cross-check results."""

import itertools
import math

import numpy as np


def coordinate_order(bound):
    return sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x < 0))


def brute_force_first_isotropic(entries, bound):
    """First primitive isotropic vector over the full box, in witness order."""
    r = len(entries)
    for v in itertools.product(coordinate_order(bound), repeat=r):
        lead = next((x for x in v if x != 0), 0)
        if lead <= 0 or math.gcd(*v) != 1:
            continue
        q = sum(v[i] * entries[i][j] * v[j] for i in range(r) for j in range(r))
        if q == 0:
            return v
    return None


def diag_rank2_isotropic_exists(d, n, bound):
    """Does d x^2 = n y^2 have a solution with 1 <= x, y <= bound (whole-box scan)?"""
    k = np.arange(1, bound + 1, dtype=np.int64) ** 2
    return np.intersect1d(d * k, n * k).size > 0


def float_signature(entries):
    ev = np.linalg.eigvalsh(np.array(entries, dtype=float))
    return int((ev > 1e-9).sum()), int((ev < -1e-9).sum())


def perfect_squares(lo, hi):
    return {m * m for m in range(hi + 1) if lo <= m * m <= hi}
