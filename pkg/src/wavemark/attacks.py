"""Attack harness: the distortions the watermark is benchmarked against.

Every attack maps a (H, W, 3) uint8 image to another one of the same
shape, so attacked files feed straight back into extraction.
"""

from dataclasses import dataclass

import numpy as np

from .block_dct import block_join, block_split, dct_basis
from .color_space import YiqImage, quantize_u8, rgb_to_yiq, yiq_to_rgb
from .keystream import PnGenerator

KINDS = ("scale", "rotate", "jpeg", "gaussian_noise", "salt_pepper")

# standard JPEG luminance quantization table, applied to all three planes
JPEG_LUMA_QTABLE = np.array(
    [
        [16, 11, 10, 16, 24, 40, 51, 61],
        [12, 12, 14, 19, 26, 58, 60, 55],
        [14, 13, 16, 24, 40, 57, 69, 56],
        [14, 17, 22, 29, 51, 87, 80, 62],
        [18, 22, 37, 56, 68, 109, 103, 77],
        [24, 35, 55, 64, 81, 104, 113, 92],
        [49, 64, 78, 87, 103, 121, 120, 101],
        [72, 92, 95, 98, 112, 100, 103, 99],
    ],
    dtype=np.float64,
)

_DCT8 = dct_basis(8)


@dataclass(frozen=True)
class AttackSpec:
    kind: str
    param: float
    rng_seed: int = 0


def _check_rgb(img):
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.dtype != np.uint8:
        raise ValueError("expected a (H, W, 3) uint8 image")
    return arr


# ---------------------------------------------------------------
# resampling attacks
# ---------------------------------------------------------------

def _axis_coords(out_n, in_n):
    """Endpoint-aligned source positions: 0 and in_n-1 map to the ends."""
    if in_n == 1 or out_n == 1:
        return np.zeros(out_n, dtype=np.int64), np.zeros(out_n, dtype=np.int64), np.zeros(out_n)
    pos = np.arange(out_n) * ((in_n - 1) / (out_n - 1))
    lo = np.minimum(pos.astype(np.int64), in_n - 2)
    frac = pos - lo
    return lo, lo + 1, frac


def _resize_axis(arr, out_n, axis):
    lo, hi, frac = _axis_coords(out_n, arr.shape[axis])
    a = np.take(arr, lo, axis=axis)
    b = np.take(arr, hi, axis=axis)
    shape = [1] * arr.ndim
    shape[axis] = out_n
    f = frac.reshape(shape)
    return a + f * (b - a)


def _resize_bilinear(img_f, out_h, out_w):
    return _resize_axis(_resize_axis(img_f, out_h, axis=0), out_w, axis=1)


def attack_scale(img, factor):
    """Bilinear downscale by `factor` then upscale back to the original size."""
    arr = _check_rgb(img)
    if not 0.0 < factor <= 1.0:
        raise ValueError("scale factor must be in (0, 1]")
    h, w = arr.shape[:2]
    inter_h = int(np.floor(factor * h + 0.5))
    inter_w = int(np.floor(factor * w + 0.5))
    if inter_h < 2 or inter_w < 2:
        raise ValueError(f"intermediate size {inter_h}x{inter_w} is degenerate")
    small = _resize_bilinear(arr.astype(np.float64), inter_h, inter_w)
    back = _resize_bilinear(small, h, w)
    return quantize_u8(back)


def _rotate_once(arr_f, degrees):
    """Rotate about the image center, bilinear sampling, edge replication."""
    h, w = arr_f.shape[:2]
    cy, cx = (h - 1) / 2.0, (w - 1) / 2.0
    yy, xx = np.indices((h, w), dtype=np.float64)
    theta = np.deg2rad(degrees)
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    dx, dy = xx - cx, yy - cy
    sx = np.clip(cos_t * dx + sin_t * dy + cx, 0.0, w - 1.0)
    sy = np.clip(-sin_t * dx + cos_t * dy + cy, 0.0, h - 1.0)
    x0 = np.minimum(sx.astype(np.int64), w - 2) if w > 1 else sx.astype(np.int64)
    y0 = np.minimum(sy.astype(np.int64), h - 2) if h > 1 else sy.astype(np.int64)
    fx = (sx - x0)[:, :, None]
    fy = (sy - y0)[:, :, None]
    p00 = arr_f[y0, x0]
    p01 = arr_f[y0, x0 + 1]
    p10 = arr_f[y0 + 1, x0]
    p11 = arr_f[y0 + 1, x0 + 1]
    top = p00 + fx * (p01 - p00)
    bottom = p10 + fx * (p11 - p10)
    return top + fy * (bottom - top)


def attack_rotate(img, degrees):
    """Rotate then counter-rotate, the realign protocol for a blind extractor."""
    arr = _check_rgb(img)
    rotated = quantize_u8(_rotate_once(arr.astype(np.float64), degrees))
    return quantize_u8(_rotate_once(rotated.astype(np.float64), -degrees))


# ---------------------------------------------------------------
# compression surrogate
# ---------------------------------------------------------------

def _jpeg_plane(plane, qtable):
    h, w = plane.shape
    pad_h, pad_w = (-h) % 8, (-w) % 8
    padded = np.pad(plane, ((0, pad_h), (0, pad_w)), mode="edge")
    blocks = block_split(padded, 8)
    coeffs = _DCT8 @ blocks @ _DCT8.T
    coeffs = np.rint(coeffs / qtable) * qtable
    restored = block_join(_DCT8.T @ coeffs @ _DCT8, *padded.shape)
    return restored[:h, :w]


def attack_jpeg(img, quality):
    """Blockwise DCT quantization in the YIQ domain, a JPEG stand-in.

    The luminance table is scaled by 50/quality below 50, otherwise by
    2 - quality/50, with every divisor clamped to at least 1.
    """
    arr = _check_rgb(img)
    quality = int(quality)
    if not 1 <= quality <= 100:
        raise ValueError("quality must be in [1, 100]")
    scale = 50.0 / quality if quality < 50 else 2.0 - quality / 50.0
    qtable = np.maximum(JPEG_LUMA_QTABLE * scale, 1.0)
    yiq = rgb_to_yiq(arr)
    return yiq_to_rgb(YiqImage(*(_jpeg_plane(p, qtable) for p in yiq)))


# ---------------------------------------------------------------
# noise
# ---------------------------------------------------------------

def attack_noise(img, spec):
    """Seeded gaussian or salt-and-pepper noise from the keystream generator."""
    arr = _check_rgb(img)
    gen = PnGenerator(spec.rng_seed)
    if spec.kind == "gaussian_noise":
        sigma = float(spec.param)
        if sigma < 0:
            raise ValueError("sigma must be >= 0")
        noise = gen.gaussians(arr.size).reshape(arr.shape) * sigma
        return quantize_u8(arr.astype(np.float64) + noise)
    if spec.kind == "salt_pepper":
        fraction = float(spec.param)
        if not 0.0 <= fraction <= 1.0:
            raise ValueError("flip fraction must be in [0, 1]")
        pixels = arr.shape[0] * arr.shape[1]
        flip = gen.uniforms(pixels) < fraction
        salt = gen.uniforms(pixels) < 0.5
        out = arr.reshape(pixels, 3).copy()
        out[flip] = np.where(salt[flip, None], 255, 0)
        return out.reshape(arr.shape)
    raise ValueError(f"unknown noise kind {spec.kind!r}")


def apply_attack(img, spec):
    """Dispatch one AttackSpec."""
    if spec.kind == "scale":
        return attack_scale(img, spec.param)
    if spec.kind == "rotate":
        return attack_rotate(img, spec.param)
    if spec.kind == "jpeg":
        return attack_jpeg(img, spec.param)
    if spec.kind in ("gaussian_noise", "salt_pepper"):
        return attack_noise(img, spec)
    raise ValueError(f"unknown attack kind {spec.kind!r}")
