"""Self-describing file format for compressed audio.

A compressed file is still a RIFF/WAVE file. It holds the source ``fmt ``
chunk unchanged, then a ``CMPR`` chunk naming the codec and its parameters,
then a ``data`` chunk with the encoded payload. The CMPR body is 12 bytes::

    0 u8 codec id (1 silence, 2 companding)   1 u8 version (1)
    2 u8 bits (0 for silence)   3 u8 threshold   4 u8 start threshold
    5 u8 stop threshold   6 u16 reserved (0)   8 u32 original data length

All integers are little-endian.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Union

from . import wav
from .bitpack import packed_size
from .errors import BadVersion, InvariantViolation, MissingChunk, NotCompressed, Truncated
from .silence import SilenceParams

SILENCE = 1
COMPAND = 2
CODEC_NAMES = {SILENCE: "silence", COMPAND: "compand"}
VERSION = 1

_CMPR = struct.Struct("<BBBBBBHI")
_CHUNK_HEADER = struct.Struct("<4sI")


@dataclass(frozen=True)
class CompressedFile:
    codec_id: int
    params: Union[SilenceParams, int]
    original_data_len: int
    source_format: wav.FormatChunk
    payload: bytes

    @property
    def bits(self) -> int:
        return self.params if self.codec_id == COMPAND else 0

    def validate(self) -> None:
        self.source_format.validate()
        if not 0 <= self.original_data_len <= 0xFFFFFFFF:
            raise InvariantViolation(f"original length {self.original_data_len} does not fit u32")
        if self.codec_id == SILENCE:
            p = self.params
            if not isinstance(p, SilenceParams):
                raise InvariantViolation("silence codec needs SilenceParams")
            # only these three are stored; center and escape code are fixed
            if (p.silence_center, p.silence_code) != (0x80, 0xFF):
                raise InvariantViolation("container stores silence files with center 0x80 and code 0xFF only")
            if max(p.threshold, p.start_threshold, p.stop_threshold) > 255:
                raise InvariantViolation("silence thresholds must fit in one byte")
        elif self.codec_id == COMPAND:
            bits = self.params
            if isinstance(bits, bool) or not isinstance(bits, int) or not 1 <= bits <= 8:
                raise InvariantViolation(f"companding bits must be 1..8, got {bits!r}")
            expected = packed_size(self.original_data_len, bits)
            if len(self.payload) != expected:
                raise InvariantViolation(
                    f"payload is {len(self.payload)} bytes, {self.original_data_len} "
                    f"codes of {bits} bits need {expected}"
                )
        else:
            raise InvariantViolation(f"unknown codec id {self.codec_id}")

    @property
    def file_size(self) -> int:
        n = len(self.payload)
        return 12 + 8 + 16 + 8 + _CMPR.size + 8 + n + (n & 1)


def _cmpr_body(f: CompressedFile) -> bytes:
    if f.codec_id == SILENCE:
        p = f.params
        return _CMPR.pack(SILENCE, VERSION, 0, p.threshold, p.start_threshold, p.stop_threshold, 0, f.original_data_len)
    return _CMPR.pack(COMPAND, VERSION, f.params, 0, 0, 0, 0, f.original_data_len)


def write_compressed(f: CompressedFile) -> bytes:
    f.validate()
    payload = bytes(f.payload)
    pad = b"\x00" * (len(payload) & 1)
    body = b"".join(
        [
            b"WAVE",
            _CHUNK_HEADER.pack(b"fmt ", 16),
            f.source_format.pack(),
            _CHUNK_HEADER.pack(b"CMPR", _CMPR.size),
            _cmpr_body(f),
            _CHUNK_HEADER.pack(b"data", len(payload)),
            payload,
            pad,
        ]
    )
    return b"RIFF" + struct.pack("<I", len(body)) + body


def read_compressed(buf: bytes) -> CompressedFile:
    buf = bytes(buf)
    wav.check_riff_header(buf)
    fmt = cmpr = payload = None
    for tag, body, length in wav.walk_chunks(buf):
        if tag == "fmt " and fmt is None:
            fmt = wav.FormatChunk.unpack(buf[body : body + length])
        elif tag == "CMPR" and cmpr is None:
            if length < _CMPR.size:
                raise Truncated(f"CMPR chunk is {length} bytes, need {_CMPR.size}")
            cmpr = _CMPR.unpack_from(buf, body)
        elif tag == "data" and payload is None:
            payload = buf[body : body + length]
    if cmpr is None:
        raise NotCompressed("no CMPR chunk; this is not a compressed file")
    if fmt is None:
        raise MissingChunk("no 'fmt ' chunk")
    if payload is None:
        raise MissingChunk("no 'data' chunk")

    codec_id, version, bits, threshold, start, stop, _reserved, original_len = cmpr
    if version != VERSION:
        raise BadVersion(f"CMPR version {version}, this reader handles {VERSION}")
    if codec_id == SILENCE:
        try:
            params = SilenceParams(threshold=threshold, start_threshold=start, stop_threshold=stop)
        except ValueError as exc:
            raise InvariantViolation(f"bad silence parameters in CMPR chunk: {exc}") from exc
    elif codec_id == COMPAND:
        params = bits
        if 1 <= bits <= 8 and len(payload) < packed_size(original_len, bits):
            raise Truncated(
                f"payload holds {len(payload)} bytes, {original_len} samples need "
                f"{packed_size(original_len, bits)}"
            )
    else:
        raise InvariantViolation(f"unknown codec id {codec_id}")
    out = CompressedFile(codec_id, params, original_len, fmt, payload)
    out.validate()
    return out
