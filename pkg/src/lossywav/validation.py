from __future__ import annotations

import numpy as np

from .errors import UnsupportedFormat
from .wav import WavFile


def check_samples(X) -> bytes:
    """Coerce bytes, a WavFile, or an integer array of 0..255 into sample bytes."""
    if isinstance(X, WavFile):
        check_codec_format(X)
        return X.data
    if isinstance(X, (bytes, bytearray, memoryview)):
        return bytes(X)
    arr = np.asarray(X)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.ravel()
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D sample sequence, got shape {arr.shape}")
    if arr.size == 0:
        return b""
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.mod(arr, 1) == 0):
            raise ValueError("samples must be integers")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError("8-bit samples must lie in 0..255")
    return arr.astype(np.uint8).tobytes()


def check_codec_format(wav: WavFile) -> None:
    """Both codecs only handle 8-bit mono PCM."""
    fmt = wav.format
    if fmt.bits_per_sample != 8 or fmt.channels != 1:
        raise UnsupportedFormat(
            f"codecs need 8-bit mono PCM, got {fmt.bits_per_sample}-bit "
            f"with {fmt.channels} channel(s)"
        )
