"""Orthonormal block DCT and mid-band coefficient access for 4x4 blocks.

All transforms accept stacks: any array shaped (..., n, n) is processed
blockwise, which keeps the per-image loops in plain numpy.
"""

import numpy as np


def dct_basis(n):
    """Orthonormal DCT-II basis matrix C with C[p, m] = a_p cos(pi (2m+1) p / 2n)."""
    m = np.arange(n)
    p = np.arange(n).reshape(-1, 1)
    basis = np.cos(np.pi * (2 * m + 1) * p / (2 * n)) * np.sqrt(2.0 / n)
    basis[0, :] = np.sqrt(1.0 / n)
    return basis


_DCT4 = dct_basis(4)

# Seven positions on the two middle anti-diagonals (row + col in {2, 3}),
# ordered by diagonal then by row. (0, 0) is DC; low-band coefficients stay
# untouched for transparency, high-band ones are too fragile.
MIDBAND_MASK = ((0, 2), (1, 1), (2, 0), (0, 3), (1, 2), (2, 1), (3, 0))


def _check_block(arr, n):
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim < 2 or a.shape[-2:] != (n, n):
        raise ValueError(f"expected trailing dimensions ({n}, {n})")
    return a


def dct4(block):
    """Forward 4x4 DCT of one block or a stack of blocks."""
    b = _check_block(block, 4)
    return _DCT4 @ b @ _DCT4.T


def idct4(coeffs):
    """Inverse 4x4 DCT, the exact transpose pair of dct4."""
    c = _check_block(coeffs, 4)
    return _DCT4.T @ c @ _DCT4


def validate_mask(mask):
    """Check a mid-band mask: distinct in-range positions, no DC, length >= 4."""
    mask = tuple((int(r), int(c)) for r, c in mask)
    if len(mask) < 4:
        raise ValueError("mask needs at least 4 positions")
    if len(set(mask)) != len(mask):
        raise ValueError("mask positions must be distinct")
    for r, c in mask:
        if not (0 <= r < 4 and 0 <= c < 4):
            raise ValueError(f"mask position {(r, c)} outside a 4x4 block")
        if (r, c) == (0, 0):
            raise ValueError("mask must not include the DC coefficient")
    return mask


def midband_get(coeffs, mask=MIDBAND_MASK):
    """Gather the masked coefficients as a vector (or stack of vectors)."""
    c = _check_block(coeffs, 4)
    rows = [r for r, _ in mask]
    cols = [c_ for _, c_ in mask]
    return c[..., rows, cols]


def midband_set(coeffs, values, mask=MIDBAND_MASK):
    """Return a copy of `coeffs` with the masked positions replaced."""
    c = _check_block(coeffs, 4).copy()
    values = np.asarray(values, dtype=np.float64)
    if values.shape[-1] != len(mask):
        raise ValueError(f"expected {len(mask)} values per block")
    rows = [r for r, _ in mask]
    cols = [c_ for _, c_ in mask]
    c[..., rows, cols] = values
    return c


def block_split(plane, size):
    """Tile a 2-D plane into (n_blocks, size, size), row-major block order."""
    p = np.asarray(plane, dtype=np.float64)
    h, w = p.shape
    if h % size or w % size:
        raise ValueError(f"plane {h}x{w} is not divisible into {size}x{size} blocks")
    br, bc = h // size, w // size
    return p.reshape(br, size, bc, size).transpose(0, 2, 1, 3).reshape(-1, size, size)


def block_join(blocks, height, width):
    """Inverse of block_split for a plane of the given dimensions."""
    b = np.asarray(blocks, dtype=np.float64)
    size = b.shape[-1]
    br, bc = height // size, width // size
    return (
        b.reshape(br, bc, size, size).transpose(0, 2, 1, 3).reshape(height, width)
    )
