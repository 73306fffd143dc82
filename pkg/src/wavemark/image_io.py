"""Image file I/O: PNG via Pillow plus hand-rolled binary PPM (P6) and PGM (P5).

Only 8-bit images with maxval 255 are accepted. The PPM/PGM codecs are
written out longhand so test fixtures can be authored byte by byte.
"""

import io
import struct

import numpy as np
from PIL import Image

MAX_DIM = 16384

_PNG_SIG = b"\x89PNG\r\n\x1a\n"


class UnsupportedFormatError(Exception):
    """File is a recognized image but outside the supported subset."""


class CorruptDataError(Exception):
    """File pretends to be a supported format but its contents do not parse."""


# ---------------------------------------------------------------
# PNM (PPM/PGM) codec
# ---------------------------------------------------------------

def _pnm_tokens(data, count):
    """Yield `count` header tokens starting after the magic, plus payload offset."""
    pos = 2
    tokens = []
    while len(tokens) < count:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise CorruptDataError("truncated header")
        tokens.append(data[start:pos])
    # exactly one whitespace byte separates the maxval from the payload
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise CorruptDataError("missing payload separator")
    return tokens, pos + 1


def _parse_pnm(data, channels):
    try:
        tokens, offset = _pnm_tokens(data, 3)
        width, height, maxval = (int(t) for t in tokens)
    except (ValueError, CorruptDataError) as exc:
        raise CorruptDataError(f"bad header: {exc}") from None
    if width <= 0 or height <= 0:
        raise CorruptDataError("non-positive dimensions")
    if width > MAX_DIM or height > MAX_DIM:
        raise UnsupportedFormatError(f"dimensions exceed {MAX_DIM}")
    if maxval != 255:
        raise UnsupportedFormatError(f"maxval {maxval} not supported, want 255")
    payload = data[offset:]
    expected = width * height * channels
    if len(payload) != expected:
        raise CorruptDataError(
            f"payload is {len(payload)} bytes, expected {expected}"
        )
    flat = np.frombuffer(payload, dtype=np.uint8)
    if channels == 1:
        return flat.reshape(height, width).copy()
    return flat.reshape(height, width, channels).copy()


def _encode_pnm(magic, arr):
    h, w = arr.shape[:2]
    header = f"{magic}\n{w} {h}\n255\n".encode("ascii")
    return header + arr.tobytes()


# ---------------------------------------------------------------
# PNG via Pillow, with an explicit IHDR check for bit depth
# ---------------------------------------------------------------

def _png_ihdr(data):
    """Return (width, height, bitdepth, colortype) from the IHDR chunk."""
    if len(data) < 33 or data[12:16] != b"IHDR":
        raise CorruptDataError("missing IHDR chunk")
    w, h = struct.unpack(">II", data[16:24])
    bitdepth, colortype = data[24], data[25]
    return w, h, bitdepth, colortype


def _open_png(data):
    try:
        img = Image.open(io.BytesIO(data))
        img.load()
    except Exception as exc:
        raise CorruptDataError(f"PNG decode failed: {exc}") from None
    return img


def _read_png(data, want_rgb):
    w, h, bitdepth, colortype = _png_ihdr(data)
    if w > MAX_DIM or h > MAX_DIM:
        raise UnsupportedFormatError(f"dimensions exceed {MAX_DIM}")
    if bitdepth == 16:
        raise UnsupportedFormatError("16-bit PNG not supported")
    # colortype: 0 gray, 2 rgb, 3 palette, 4 gray+alpha, 6 rgb+alpha
    if want_rgb and colortype in (0, 4):
        raise UnsupportedFormatError("grayscale PNG, use read_gray")
    img = _open_png(data)
    if colortype == 3 and "transparency" in img.info:
        raise UnsupportedFormatError("palette PNG with transparency")
    if colortype in (4, 6):
        rgba = np.asarray(img.convert("RGBA"))
        if not np.all(rgba[:, :, 3] == 255):
            raise UnsupportedFormatError("alpha channel is not fully opaque")
        return rgba[:, :, :3].copy()
    if colortype == 0:
        return np.asarray(img.convert("L")).copy()
    return np.asarray(img.convert("RGB")).copy()


# ---------------------------------------------------------------
# public API
# ---------------------------------------------------------------

def read_image(path):
    """Read an 8-bit RGB image (PNG or binary PPM) as a (H, W, 3) uint8 array."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:8] == _PNG_SIG:
        out = _read_png(data, want_rgb=True)
        return out
    if data[:2] == b"P6":
        return _parse_pnm(data, 3)
    if data[:2] == b"P5":
        raise UnsupportedFormatError("grayscale PGM, use read_gray")
    raise UnsupportedFormatError("not a PNG or binary PPM file")


def read_gray(path):
    """Read a grayscale image as a (H, W) uint8 array.

    RGB input is accepted: equal channels are taken directly, otherwise
    the image is reduced with the NTSC luma weights 0.299/0.587/0.114.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:8] == _PNG_SIG:
        out = _read_png(data, want_rgb=False)
        if out.ndim == 2:
            return out
        return _luma_reduce(out)
    if data[:2] == b"P5":
        return _parse_pnm(data, 1)
    if data[:2] == b"P6":
        return _luma_reduce(_parse_pnm(data, 3))
    raise UnsupportedFormatError("not a PNG, PPM, or PGM file")


def _luma_reduce(rgb):
    r, g, b = (rgb[:, :, c].astype(np.float64) for c in range(3))
    if np.array_equal(rgb[:, :, 0], rgb[:, :, 1]) and np.array_equal(
        rgb[:, :, 0], rgb[:, :, 2]
    ):
        return rgb[:, :, 0].copy()
    y = 0.299 * r + 0.587 * g + 0.114 * b
    return np.trunc(y + 0.5).astype(np.uint8)  # y is never negative


def _pick_format(path, format, gray):
    if format is None:
        suffix = str(path).rsplit(".", 1)[-1].lower() if "." in str(path) else ""
        format = {"png": "png", "ppm": "ppm", "pgm": "pgm"}.get(suffix)
        if format is None:
            raise ValueError(f"cannot infer image format from {path!r}")
    format = format.lower()
    allowed = ("png", "pgm") if gray else ("png", "ppm")
    if format not in allowed:
        raise ValueError(f"format must be one of {allowed}, got {format!r}")
    return format


def write_image(img, path, format=None):
    """Write a (H, W, 3) uint8 array as PNG or binary PPM."""
    img = np.asarray(img)
    if img.ndim != 3 or img.shape[2] != 3 or img.dtype != np.uint8:
        raise ValueError("expected a (H, W, 3) uint8 array")
    fmt = _pick_format(path, format, gray=False)
    if fmt == "ppm":
        with open(path, "wb") as fh:
            fh.write(_encode_pnm("P6", img))
    else:
        Image.fromarray(img, "RGB").save(path, format="PNG")


def write_gray(img, path, format=None):
    """Write a (H, W) uint8 array as PNG or binary PGM."""
    img = np.asarray(img)
    if img.ndim != 2 or img.dtype != np.uint8:
        raise ValueError("expected a (H, W) uint8 array")
    fmt = _pick_format(path, format, gray=True)
    if fmt == "pgm":
        with open(path, "wb") as fh:
            fh.write(_encode_pnm("P5", img))
    else:
        Image.fromarray(img, "L").save(path, format="PNG")
