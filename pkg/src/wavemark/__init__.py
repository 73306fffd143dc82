"""Blind color image watermarking via one-level Haar DWT and 4x4 block DCT.

A square binary watermark is Arnold-scrambled, spread onto dual PN
sequences, and added to the mid-band DCT coefficients of the HL sub-band
of one YIQ channel.  Extraction is blind: it needs only the keys.
"""

__version__ = "0.1.0"

from .codec import EmbedConfig, EmbedReport, binarize, embed, extract
from .keystream import KeySchedule

__all__ = [
    "EmbedConfig",
    "EmbedReport",
    "KeySchedule",
    "binarize",
    "embed",
    "extract",
    "__version__",
]
