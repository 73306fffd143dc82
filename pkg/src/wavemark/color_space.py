"""RGB <-> YIQ conversion with the classic NTSC coefficient pair.

The forward and inverse matrices are the standard published ones. They are
not exact matrix inverses of each other; the composed round trip deviates
by at most 0.41 of a gray level on 8-bit input, which the final
round-and-clamp step absorbs.
"""

from typing import NamedTuple

import numpy as np


class YiqImage(NamedTuple):
    """Three float64 planes of identical shape."""

    y: np.ndarray
    i: np.ndarray
    q: np.ndarray


def quantize_u8(values):
    """Round half away from zero, clamp to [0, 255], return uint8."""
    values = np.asarray(values, dtype=np.float64)
    rounded = np.trunc(values + np.copysign(0.5, values))
    return np.clip(rounded, 0.0, 255.0).astype(np.uint8)


def rgb_to_yiq(img):
    """Convert a (H, W, 3) uint8 RGB image to double-precision YIQ planes."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError("expected a (H, W, 3) RGB array")
    r = arr[:, :, 0].astype(np.float64)
    g = arr[:, :, 1].astype(np.float64)
    b = arr[:, :, 2].astype(np.float64)
    y = 0.299 * r + 0.587 * g + 0.114 * b
    i = 0.596 * r - 0.274 * g - 0.322 * b
    q = 0.211 * r - 0.522 * g + 0.311 * b
    return YiqImage(y, i, q)


def yiq_to_rgb(yiq):
    """Convert YIQ planes back to a (H, W, 3) uint8 RGB image."""
    y, i, q = (np.asarray(p, dtype=np.float64) for p in yiq)
    if not (y.shape == i.shape == q.shape) or y.ndim != 2:
        raise ValueError("Y, I, Q planes must be 2-D and share one shape")
    r = y + 0.956 * i + 0.621 * q
    g = y - 0.272 * i - 0.647 * q
    b = y - 1.106 * i + 1.702 * q
    return quantize_u8(np.stack([r, g, b], axis=-1))
