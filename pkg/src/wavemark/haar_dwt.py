"""One-level 2-D orthonormal Haar transform.

Each 2x2 cell [a b; c d] maps to
    ll = (a+b+c+d)/2    lh = (a+b-c-d)/2
    hl = (a-b+c-d)/2    hh = (a-b-c+d)/2
so hl is the horizontal-detail band (high-pass along rows) and total
energy is preserved exactly.
"""

from typing import NamedTuple

import numpy as np


class SubBands(NamedTuple):
    ll: np.ndarray
    hl: np.ndarray
    lh: np.ndarray
    hh: np.ndarray


def dwt_haar(plane):
    """Split a 2-D plane with even dimensions into its four half-size bands."""
    p = np.asarray(plane, dtype=np.float64)
    if p.ndim != 2:
        raise ValueError("expected a 2-D plane")
    h, w = p.shape
    if h % 2 or w % 2:
        raise ValueError(f"plane dimensions must be even, got {h}x{w}")
    a = p[0::2, 0::2]
    b = p[0::2, 1::2]
    c = p[1::2, 0::2]
    d = p[1::2, 1::2]
    return SubBands(
        ll=(a + b + c + d) / 2.0,
        hl=(a - b + c - d) / 2.0,
        lh=(a + b - c - d) / 2.0,
        hh=(a - b - c + d) / 2.0,
    )


def idwt_haar(bands):
    """Rebuild the plane from four equally shaped sub-bands."""
    ll, hl, lh, hh = (np.asarray(b, dtype=np.float64) for b in bands)
    if not (ll.shape == hl.shape == lh.shape == hh.shape) or ll.ndim != 2:
        raise ValueError("all four bands must be 2-D and share one shape")
    h, w = ll.shape
    out = np.empty((2 * h, 2 * w), dtype=np.float64)
    out[0::2, 0::2] = (ll + hl + lh + hh) / 2.0
    out[0::2, 1::2] = (ll - hl + lh - hh) / 2.0
    out[1::2, 0::2] = (ll + hl - lh - hh) / 2.0
    out[1::2, 1::2] = (ll - hl - lh + hh) / 2.0
    return out
