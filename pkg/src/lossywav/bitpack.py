"""Fixed-width code packing, most significant bit first."""

from __future__ import annotations

import numpy as np

from .errors import BitsOutOfRange, PayloadTooShort


def packed_size(count: int, bits: int) -> int:
    return (count * bits + 7) // 8


def _check_bits(bits: int) -> None:
    if not 1 <= bits <= 8:
        raise BitsOutOfRange(f"code width must be 1..8 bits, got {bits}")


def pack(codes, bits: int) -> bytes:
    """Pack ``bits``-wide codes into bytes; the last byte is zero padded."""
    _check_bits(bits)
    codes = np.asarray(codes, dtype=np.uint8).ravel()
    if codes.size and int(codes.max()) >> bits:
        raise ValueError(f"code {int(codes.max())} does not fit in {bits} bits")
    if bits == 8:
        return codes.tobytes()
    shifts = np.arange(bits - 1, -1, -1, dtype=np.uint8)
    bitplane = (codes[:, None] >> shifts) & 1
    return np.packbits(bitplane.ravel()).tobytes()


def unpack(payload: bytes, bits: int, count: int) -> np.ndarray:
    """Read ``count`` codes back out of ``payload``; trailing pad bits are ignored."""
    _check_bits(bits)
    need = packed_size(count, bits)
    if len(payload) < need:
        raise PayloadTooShort(
            f"{count} codes of {bits} bits need {need} bytes, payload has {len(payload)}"
        )
    raw = np.frombuffer(bytes(payload[:need]), dtype=np.uint8)
    if bits == 8:
        return raw.copy()
    stream = np.unpackbits(raw)[: count * bits].reshape(count, bits)
    weights = (1 << np.arange(bits - 1, -1, -1)).astype(np.uint16)
    return (stream @ weights).astype(np.uint8)
