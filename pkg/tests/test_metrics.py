import math

import numpy as np
import pytest

from wavemark.metrics import ber, histogram, nc, psnr


def test_psnr_identical_is_infinite():
    img = np.full((8, 8, 3), 40, dtype=np.uint8)
    assert psnr(img, img) == math.inf


def test_psnr_maximal_error_is_zero_db():
    a = np.zeros((8, 8, 3), dtype=np.uint8)
    b = np.full((8, 8, 3), 255, dtype=np.uint8)
    assert psnr(a, b) == pytest.approx(0.0, abs=1e-12)


def test_psnr_single_sample_off_by_one():
    a = np.zeros((512, 512, 3), dtype=np.uint8)
    b = a.copy()
    b[100, 200, 1] = 1
    expected = 10.0 * math.log10(255.0**2 * (3 * 512 * 512))  # MSE = 1/(3MN)
    assert psnr(a, b) == pytest.approx(expected, abs=1e-9)
    assert expected == pytest.approx(107.08741537539234, abs=1e-10)


def test_psnr_symmetric_and_monotone():
    rng = np.random.default_rng(61)
    base = rng.integers(0, 200, size=(16, 16, 3)).astype(np.uint8)
    small = base.copy()
    small[0, 0, 0] += 10
    large = base.copy()
    large[:4] += 40
    assert psnr(base, small) == psnr(small, base)
    assert psnr(base, small) > psnr(base, large)


def test_psnr_shape_mismatch():
    with pytest.raises(ValueError):
        psnr(np.zeros((4, 4, 3)), np.zeros((4, 5, 3)))


def test_nc_identity_is_exactly_one():
    rng = np.random.default_rng(67)
    for _ in range(100):
        w = rng.integers(0, 2, size=(32, 32))
        if w.sum() == 0:
            w[0, 0] = 1
        assert nc(w, w) == 1.0


def test_nc_zero_denominator_rule():
    ones = np.ones((64, 64), dtype=np.uint8)
    zeros = np.zeros((64, 64), dtype=np.uint8)
    assert nc(ones, zeros) == 0.0
    assert nc(zeros, ones) == 0.0
    assert nc(zeros, zeros) == 0.0


def test_nc_half_ones_case():
    # sum(w w2) = 2048 over sqrt(4096 * 2048): exactly 1/sqrt(2)
    ones = np.ones((64, 64), dtype=np.uint8)
    half = np.zeros(4096, dtype=np.uint8)
    half[:2048] = 1
    value = nc(ones, half.reshape(64, 64))
    assert value == pytest.approx(math.sqrt(0.5), abs=1e-12)


def test_nc_rejects_non_binary_and_mismatch():
    with pytest.raises(ValueError):
        nc(np.full((4, 4), 2), np.ones((4, 4)))
    with pytest.raises(ValueError):
        nc(np.ones((4, 4)), np.ones((4, 5)))
    with pytest.raises(ValueError):
        nc(np.ones(16), np.ones(16))


def test_ber_basics():
    rng = np.random.default_rng(71)
    w = rng.integers(0, 2, size=(64, 64))
    assert ber(w, w) == 0.0
    assert ber(w, 1 - w) == 1.0
    flipped = w.copy()
    flipped[:32] = 1 - flipped[:32]
    assert ber(w, flipped) == 0.5
    assert ber(w, flipped) == ber(flipped, w)


def test_ber_input_checks():
    with pytest.raises(ValueError):
        ber(np.ones((4, 4)), np.ones((8, 8)))
    with pytest.raises(ValueError):
        ber(np.full((4, 4), 3), np.ones((4, 4)))


def test_histogram_all_black():
    img = np.zeros((10, 20, 3), dtype=np.uint8)
    h = histogram(img, "r")
    assert h[0] == 200
    assert h[1:].sum() == 0
    assert h.shape == (256,)


def test_histogram_sums_to_pixel_count():
    rng = np.random.default_rng(73)
    img = rng.integers(0, 256, size=(31, 17, 3), dtype=np.uint8)
    for channel in ("r", "g", "b"):
        assert histogram(img, channel).sum() == 31 * 17


def test_histogram_two_pixel_example():
    img = np.zeros((1, 2, 3), dtype=np.uint8)
    img[0, 1, 0] = 255
    h = histogram(img, "R")  # case-insensitive channel
    assert h[0] == 1 and h[255] == 1 and h.sum() == 2


def test_histogram_channel_selection():
    img = np.zeros((2, 2, 3), dtype=np.uint8)
    img[:, :, 2] = 9
    assert histogram(img, "b")[9] == 4
    assert histogram(img, "r")[9] == 0


def test_histogram_input_checks():
    with pytest.raises(ValueError):
        histogram(np.zeros((4, 4), dtype=np.uint8), "r")
    with pytest.raises(ValueError):
        histogram(np.zeros((4, 4, 3), dtype=np.uint8), "x")
