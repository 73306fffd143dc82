"""Quality and recovery metrics: PSNR, normalized correlation, BER, histograms."""

import math

import numpy as np

_CHANNELS = {"r": 0, "g": 1, "b": 2}


def psnr(reference, test):
    """Peak signal-to-noise ratio in dB over all channel samples.

    Identical inputs return math.inf.
    """
    a = np.asarray(reference, dtype=np.float64)
    b = np.asarray(test, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    mse = np.mean((a - b) ** 2)
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0**2 / mse)


def _check_bits(m, name):
    arr = np.asarray(m)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError(f"{name} must contain only 0 and 1")
    return arr.astype(np.float64)


def nc(expected, recovered):
    """Normalized correlation sum(w w') / (sqrt(sum w) sqrt(sum w')).

    The denominator uses one square root of the product so that identical
    matrices score exactly 1.0. Returns 0.0 when either matrix is all zero.
    """
    w = _check_bits(expected, "expected")
    w2 = _check_bits(recovered, "recovered")
    if w.shape != w2.shape:
        raise ValueError(f"shape mismatch: {w.shape} vs {w2.shape}")
    denominator = math.sqrt(float(w.sum()) * float(w2.sum()))
    if denominator == 0.0:
        return 0.0
    return float((w * w2).sum()) / denominator


def ber(expected, recovered):
    """Fraction of differing bits."""
    w = _check_bits(expected, "expected")
    w2 = _check_bits(recovered, "recovered")
    if w.shape != w2.shape:
        raise ValueError(f"shape mismatch: {w.shape} vs {w2.shape}")
    return float(np.mean(w != w2))


def histogram(img, channel):
    """256-bin histogram of one channel of a (H, W, 3) uint8 image."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError("expected a (H, W, 3) RGB array")
    key = str(channel).lower()
    if key not in _CHANNELS:
        raise ValueError(f"channel must be one of r, g, b, got {channel!r}")
    return np.bincount(arr[:, :, _CHANNELS[key]].ravel(), minlength=256)
