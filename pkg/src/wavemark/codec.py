"""Blind watermark embedding and extraction.

Embedding walks the 4x4 blocks of the HL band of one YIQ channel and adds
k * pn0 (bit 0) or k * pn1 (bit 1) to each block's mid-band DCT
coefficients, where the bits come from the Arnold-scrambled watermark.
Extraction is blind: it re-derives both PN sequences and the scrambling
depth from the keys and picks, per block, the sequence that correlates
better with the recovered mid-band vector.
"""

from dataclasses import dataclass

import numpy as np

from .arnold import arnold_iterate, arnold_period, arnold_unscramble
from .block_dct import (
    MIDBAND_MASK,
    block_join,
    block_split,
    dct4,
    idct4,
    midband_get,
    midband_set,
    validate_mask,
)
from .color_space import rgb_to_yiq, yiq_to_rgb
from .haar_dwt import SubBands, dwt_haar, idwt_haar
from .keystream import KeySchedule, pn_pair, scramble_iterations
from .metrics import psnr

CHANNELS = ("y", "i", "q")


@dataclass(frozen=True)
class EmbedConfig:
    keys: KeySchedule
    channel: str = "q"
    k: float = 4.0
    mask: tuple = MIDBAND_MASK
    wm_side: int = 64

    def __post_init__(self):
        if self.channel not in CHANNELS:
            raise ValueError(f"channel must be one of {CHANNELS}")
        if not self.k > 0:
            raise ValueError("embedding strength k must be > 0")
        if self.wm_side < 1:
            raise ValueError("wm_side must be >= 1")
        object.__setattr__(self, "mask", validate_mask(self.mask))


@dataclass(frozen=True)
class EmbedReport:
    psnr_db: float
    channel: str
    k: float
    scramble_iterations: int
    blocks_modified: int


def binarize(gray, threshold=128):
    """Threshold a square grayscale image to a 0/1 matrix (1 iff >= threshold)."""
    arr = np.asarray(gray)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("watermark image must be square")
    return (arr >= threshold).astype(np.uint8)


def embed_hl(hl, bits, pn0, pn1, k, mask=MIDBAND_MASK):
    """Spread one bit into each 4x4 block of an HL band; returns the new band.

    `bits` pairs with the blocks in row-major order. Only the masked
    coefficients change, so the untouched sub-bands and the block DC
    terms pass through exactly.
    """
    blocks = block_split(hl, 4)
    bits = np.asarray(bits).ravel()
    if bits.shape[0] != blocks.shape[0]:
        raise ValueError(
            f"{bits.shape[0]} bits cannot pair with {blocks.shape[0]} blocks"
        )
    coeffs = dct4(blocks)
    mid = midband_get(coeffs, mask)
    pn = np.where((bits == 0)[:, None], pn0, pn1)
    coeffs = midband_set(coeffs, mid + float(k) * pn, mask)
    return block_join(idct4(coeffs), *hl.shape)


def _pearson_rows(vectors, sequence):
    """Pearson correlation of each row against one sequence, 0 on zero variance."""
    seq = np.asarray(sequence, dtype=np.float64)
    seq_c = seq - seq.mean()
    seq_norm = np.sqrt((seq_c**2).sum())
    rows_c = vectors - vectors.mean(axis=1, keepdims=True)
    rows_norm = np.sqrt((rows_c**2).sum(axis=1))
    denominator = rows_norm * seq_norm
    numerator = rows_c @ seq_c
    return np.divide(
        numerator,
        denominator,
        out=np.zeros_like(numerator),
        where=denominator > 0,
    )


def extract_hl(hl, pn0, pn1, mask=MIDBAND_MASK):
    """Recover one bit per 4x4 block: 0 when pn0 correlates strictly better."""
    mid = midband_get(dct4(block_split(hl, 4)), mask)
    corr0 = _pearson_rows(mid, pn0)
    corr1 = _pearson_rows(mid, pn1)
    return np.where(corr0 > corr1, 0, 1).astype(np.uint8)


def _check_cover(img, wm_side):
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError("cover must be a (H, W, 3) RGB array")
    h, w = arr.shape[:2]
    if h % 8 or w % 8:
        raise ValueError(f"cover dimensions must be divisible by 8, got {h}x{w}")
    blocks = (h // 8) * (w // 8)
    if blocks != wm_side * wm_side:
        raise ValueError(
            f"cover holds {blocks} blocks but the watermark needs {wm_side}**2"
        )
    return arr


def embed(cover, watermark, config):
    """Embed a square binary watermark; returns (watermarked image, report)."""
    cover = _check_cover(cover, config.wm_side)
    wm = np.asarray(watermark)
    if wm.shape != (config.wm_side, config.wm_side):
        raise ValueError(
            f"watermark must be {config.wm_side}x{config.wm_side}, got {wm.shape}"
        )
    if not np.isin(wm, (0, 1)).all():
        raise ValueError("watermark must contain only 0 and 1")
    wm = wm.astype(np.uint8)

    yiq = rgb_to_yiq(cover)
    bands = dwt_haar(getattr(yiq, config.channel))

    period = arnold_period(config.wm_side)
    iterations = scramble_iterations(config.keys, wm.size, period)
    scrambled = arnold_iterate(wm, iterations)

    pair = pn_pair(config.keys.pn_seed, len(config.mask))
    new_hl = embed_hl(
        bands.hl, scrambled.ravel(), pair.pn0, pair.pn1, config.k, config.mask
    )
    new_plane = idwt_haar(SubBands(bands.ll, new_hl, bands.lh, bands.hh))
    out = yiq_to_rgb(yiq._replace(**{config.channel: new_plane}))

    report = EmbedReport(
        psnr_db=psnr(cover, out),
        channel=config.channel,
        k=float(config.k),
        scramble_iterations=iterations,
        blocks_modified=wm.size,
    )
    return out, report


def extract(img, config):
    """Blindly recover the watermark bits from a (possibly attacked) image."""
    img = _check_cover(img, config.wm_side)
    yiq = rgb_to_yiq(img)
    bands = dwt_haar(getattr(yiq, config.channel))
    pair = pn_pair(config.keys.pn_seed, len(config.mask))
    bits = extract_hl(bands.hl, pair.pn0, pair.pn1, config.mask)
    scrambled = bits.reshape(config.wm_side, config.wm_side)
    period = arnold_period(config.wm_side)
    iterations = scramble_iterations(config.keys, scrambled.size, period)
    return arnold_unscramble(scrambled, iterations)
