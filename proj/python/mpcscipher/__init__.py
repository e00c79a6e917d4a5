"""Multi-chaotic color image cipher: plaintext-coupled keystreams, bit-level
shuffling and chained diffusion, with the statistical toolkit used to
evaluate them.

Images travel as (width, height, pixels) where pixels is interleaved RGB
bytes; cipher containers and PPM files are plain bytes.
"""

from ._core import (
    DivergenceError,
    FormatError,
    battery,
    chi_square,
    correlation,
    decrypt,
    encrypt,
    entropy,
    generate_key,
    keystream_sequences,
    mean_gray,
    npcr,
    read_ppm,
    uaci,
    write_ppm,
)

__all__ = [
    "DivergenceError",
    "FormatError",
    "battery",
    "chi_square",
    "correlation",
    "decrypt",
    "encrypt",
    "entropy",
    "generate_key",
    "keystream_sequences",
    "mean_gray",
    "npcr",
    "read_ppm",
    "uaci",
    "write_ppm",
]
