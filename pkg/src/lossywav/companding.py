"""Logarithmic companding of 8-bit samples through lookup tables.

Each unsigned sample is treated as a signed magnitude around the 127/128
midpoint and assigned to one of ``2**bits`` buckets whose edges grow
exponentially with distance from the midpoint. Quiet samples therefore keep
more precision than loud ones. Encoding looks up the bucket code and bit-packs
it; decoding maps each code to its bucket's midpoint.

``map16``/``unmap16`` are the scalar form of the same curve for 16-bit sample
magnitudes, with a configurable output scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bitpack
from .errors import BitsOutOfRange

MAX_BITS = 8


def _edge(code: int, steps: int) -> float:
    return 128.0 * (2.0 ** (code / steps) - 1.0) + 0.5


@dataclass(frozen=True, eq=False)
class CompandTables:
    bits: int
    steps: int
    compress: np.ndarray
    expand: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, CompandTables):
            return NotImplemented
        return (
            self.bits == other.bits
            and np.array_equal(self.compress, other.compress)
            and np.array_equal(self.expand, other.expand)
        )

    def __hash__(self):
        return hash((self.bits, self.compress.tobytes(), self.expand.tobytes()))


def build_tables(bits: int) -> CompandTables:
    if isinstance(bits, bool) or not isinstance(bits, (int, np.integer)) or not 1 <= bits <= MAX_BITS:
        raise BitsOutOfRange(f"bits must be an integer in 1..{MAX_BITS}, got {bits!r}")
    bits = int(bits)
    steps = 1 << (bits - 1)
    compress = np.zeros(256, dtype=np.uint8)
    expand = np.zeros(2 * steps, dtype=np.uint8)

    last_edge = 0.0
    last_value = 0
    for code in range(1, steps + 1):
        edge = _edge(code, steps)
        value = math.floor(edge)
        # magnitudes last_value+1 .. value fall in this bucket, on both sides
        for j in range(value, last_value, -1):
            compress[j + 127] = steps + code - 1
            compress[128 - j] = steps - code
        half = math.floor((edge + last_edge) / 2)
        expand[steps + code - 1] = 128 + half
        expand[steps - code] = 127 - half
        last_value = value
        last_edge = edge

    compress.flags.writeable = False
    expand.flags.writeable = False
    return CompandTables(bits, steps, compress, expand)


def compand_encode(samples: bytes, tables: CompandTables) -> bytes:
    codes = tables.compress[np.frombuffer(bytes(samples), dtype=np.uint8)]
    return bitpack.pack(codes, tables.bits)


def compand_decode(payload: bytes, tables: CompandTables, sample_count: int) -> bytes:
    codes = bitpack.unpack(payload, tables.bits, sample_count)
    return tables.expand[codes].tobytes()


def max_error(tables: CompandTables) -> int:
    """Largest ``|expand[compress[s]] - s|`` over all 256 sample values."""
    samples = np.arange(256)
    restored = tables.expand[tables.compress[samples]].astype(int)
    return int(np.abs(restored - samples).max())


@dataclass(frozen=True)
class MappingParams16:
    """Output scale for the 16-bit mapping: 32767 keeps ~15 bits, 127 keeps ~8."""

    M: int = 32767

    def __post_init__(self):
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")


def _round_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def map16(sample: int, params: MappingParams16 = MappingParams16()) -> int:
    """Compress a 16-bit sample onto ``[-M, M]`` along ``M * (2**(|s|/65536) - 1)``.

    Magnitudes up to 65535 are accepted so unsigned sample values work too.
    """
    if abs(sample) > 65535:
        raise ValueError(f"sample magnitude {abs(sample)} exceeds 16 bits")
    mapped = params.M * (2.0 ** (abs(sample) / 65536.0) - 1.0)
    return _round_away(math.copysign(mapped, sample))


def unmap16(mapped: int, params: MappingParams16 = MappingParams16()) -> int:
    if abs(mapped) > params.M:
        raise ValueError(f"mapped value {mapped} outside [-{params.M}, {params.M}]")
    sample = 65536.0 * math.log2(1.0 + abs(mapped) / params.M)
    return _round_away(math.copysign(sample, mapped))
