"""Shared covers, watermarks, and keys for the test suite.

The five smooth covers are synthetic 512x512 images with deliberately
different histogram shapes (linear ramps, sinusoids, radial gradient,
gaussian blobs). The fabric cover adds mild broadband grain to the plaid,
standing in for the detail and sensor noise of a photograph. The noise
cover is full-range uniform noise, the worst case for extraction and the
best case for key-security statistics.
"""

import numpy as np
import pytest

from wavemark.keystream import KeySchedule

_YY, _XX = np.mgrid[0:512, 0:512].astype(np.float64)


def q8(x):
    """Round half up and clamp, the test-side pixel quantizer."""
    return np.clip(np.trunc(x + 0.5), 0, 255).astype(np.uint8)


def _plaid_planes():
    r = 128 + 55 * np.sin(2 * np.pi * 2 * _XX / 512) * np.cos(2 * np.pi * 3 * _YY / 512)
    g = 128 + 55 * np.sin(2 * np.pi * 3 * _XX / 512)
    b = 128 + 55 * np.cos(2 * np.pi * 2 * _YY / 512)
    return np.stack([r, g, b], axis=-1)


def cover_ramp():
    r = 20 + (_XX / 511) * 210
    g = 230 - (_XX / 511) * 210
    b = 20 + (_YY / 511) * 210
    return q8(np.stack([r, g, b], axis=-1))


def cover_diag():
    r = 25 + (_XX + _YY) / 1022 * 200
    g = 128 + 70 * np.sin(2 * np.pi * _YY / 512)
    b = 230 - (_XX + _YY) / 1022 * 200
    return q8(np.stack([r, g, b], axis=-1))


def cover_radial():
    d = np.sqrt((_XX - 255.5) ** 2 + (_YY - 255.5) ** 2) / 361.33
    r = 230 - 200 * d
    g = 40 + 180 * d
    b = 130 + 90 * np.sin(np.pi * d)
    return q8(np.stack([r, g, b], axis=-1))


def cover_plaid():
    return q8(_plaid_planes())


def cover_blobs():
    def blob(cx, cy, s, a):
        return a * np.exp(-(((_XX - cx) ** 2 + (_YY - cy) ** 2) / (2 * s * s)))

    r = 30 + blob(150, 150, 120, 190)
    g = 30 + blob(380, 180, 100, 180) + blob(100, 420, 90, 120)
    b = 30 + blob(256, 330, 150, 170)
    return q8(np.stack([r, g, b], axis=-1))


def cover_fabric():
    rng = np.random.default_rng(99)
    return q8(_plaid_planes() + rng.normal(0.0, 4.0, size=(512, 512, 3)))


def cover_noise():
    rng = np.random.default_rng(42)
    return rng.integers(0, 256, size=(512, 512, 3), dtype=np.uint8)


@pytest.fixture(scope="session")
def smooth_covers():
    return {
        "ramp": cover_ramp(),
        "diag": cover_diag(),
        "radial": cover_radial(),
        "plaid": cover_plaid(),
        "blobs": cover_blobs(),
    }


@pytest.fixture(scope="session")
def fabric_cover():
    return cover_fabric()


@pytest.fixture(scope="session")
def noise_cover():
    return cover_noise()


@pytest.fixture(scope="session")
def watermark():
    rng = np.random.default_rng(7)
    return rng.integers(0, 2, size=(64, 64)).astype(np.uint8)


@pytest.fixture(scope="session")
def keys():
    return KeySchedule(k1=15, pn_seed=15)
