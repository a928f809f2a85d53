"""Bit-exact reading and writing of PCM WAVE (RIFF) files.

The writer always emits the canonical 44-byte layout::

    0  'RIFF'   4  u32 file length - 8   8  'WAVE'
    12 'fmt '   16 u32 16                20 u16 format tag (1 = PCM)
    22 u16 channels   24 u32 sample rate   28 u32 byte rate
    32 u16 block align   34 u16 bits per sample
    36 'data'   40 u32 data length       44 samples (+ pad byte if odd)

The reader is more forgiving: it walks the chunk list, skips anything that
isn't ``fmt `` or ``data`` and records the skipped tags.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    InvariantViolation,
    MissingChunk,
    MissingRiffMagic,
    MissingWaveTag,
    Truncated,
    UnsupportedFormat,
)

PCM = 1
HEADER_SIZE = 44

_FMT = struct.Struct("<HHIIHH")
_CHUNK_HEADER = struct.Struct("<4sI")


@dataclass(frozen=True)
class FormatChunk:
    audio_format: int = PCM
    channels: int = 1
    sample_rate: int = 8000
    byte_rate: int = 8000
    block_align: int = 1
    bits_per_sample: int = 8

    @classmethod
    def pcm(cls, sample_rate: int, channels: int = 1, bits_per_sample: int = 8) -> "FormatChunk":
        """Build a consistent PCM format from the three independent fields."""
        block_align = channels * bits_per_sample // 8
        return cls(PCM, channels, sample_rate, sample_rate * block_align, block_align, bits_per_sample)

    def problems(self) -> list[str]:
        out = []
        if self.audio_format != PCM:
            out.append(f"format tag {self.audio_format} is not PCM")
        if self.channels not in (1, 2):
            out.append(f"channel count {self.channels} not in (1, 2)")
        if self.bits_per_sample not in (8, 16):
            out.append(f"bits per sample {self.bits_per_sample} not in (8, 16)")
        if self.block_align != self.channels * self.bits_per_sample // 8:
            out.append(f"block align {self.block_align} != channels * bits / 8")
        if self.byte_rate != self.sample_rate * self.block_align:
            out.append(f"byte rate {self.byte_rate} != sample rate * block align")
        return out

    def validate(self) -> None:
        problems = self.problems()
        if problems:
            raise InvariantViolation("; ".join(problems))

    def pack(self) -> bytes:
        return _FMT.pack(
            self.audio_format,
            self.channels,
            self.sample_rate,
            self.byte_rate,
            self.block_align,
            self.bits_per_sample,
        )

    @classmethod
    def unpack(cls, body: bytes) -> "FormatChunk":
        if len(body) < _FMT.size:
            raise Truncated(f"fmt chunk body is {len(body)} bytes, need {_FMT.size}")
        fmt = cls(*_FMT.unpack_from(body))
        if fmt.audio_format != PCM:
            raise UnsupportedFormat(f"format tag {fmt.audio_format:#06x} is not PCM")
        if fmt.channels not in (1, 2) or fmt.bits_per_sample not in (8, 16):
            raise UnsupportedFormat(
                f"{fmt.channels} channel(s) at {fmt.bits_per_sample} bits is not supported"
            )
        return fmt


@dataclass(frozen=True)
class WavFile:
    format: FormatChunk
    data: bytes
    skipped_chunks: tuple[str, ...] = ()
    # RIFF length field as found on disk; only used for the describe() cross-check
    declared_riff_size: int | None = field(default=None, compare=False)

    @property
    def duration(self) -> float:
        if self.format.byte_rate == 0:
            return 0.0
        return len(self.data) / self.format.byte_rate

    @property
    def file_size(self) -> int:
        """Size in bytes of this file as written by :func:`write_wav`."""
        return HEADER_SIZE + len(self.data) + (len(self.data) & 1)


def walk_chunks(buf: bytes, offset: int = 12) -> Iterator[tuple[str, int, int]]:
    """Yield ``(tag, body_offset, body_length)`` for each chunk from ``offset``.

    Raises :class:`Truncated` when a chunk header is cut short or a declared
    length runs past the end of ``buf``. A missing pad byte after the final
    odd-length chunk is tolerated.
    """
    end = len(buf)
    while offset < end:
        if end - offset < _CHUNK_HEADER.size:
            raise Truncated(f"partial chunk header at offset {offset}")
        raw_tag, length = _CHUNK_HEADER.unpack_from(buf, offset)
        body = offset + _CHUNK_HEADER.size
        if length > end - body:
            raise Truncated(
                f"chunk {raw_tag!r} at offset {offset} declares {length} bytes, "
                f"only {end - body} remain"
            )
        yield raw_tag.decode("latin-1"), body, length
        offset = body + length + (length & 1)


def check_riff_header(buf: bytes) -> int:
    """Validate the 12-byte RIFF/WAVE preamble and return the declared size."""
    if len(buf) < 4 or buf[:4] != b"RIFF":
        raise MissingRiffMagic(f"expected b'RIFF', got {bytes(buf[:4])!r}")
    if len(buf) < 12:
        raise Truncated("file ends inside the RIFF header")
    if buf[8:12] != b"WAVE":
        raise MissingWaveTag(f"expected b'WAVE', got {bytes(buf[8:12])!r}")
    return struct.unpack_from("<I", buf, 4)[0]


def parse_wav(buf: bytes) -> WavFile:
    """Parse a complete WAV file image."""
    buf = bytes(buf)
    riff_size = check_riff_header(buf)
    fmt = None
    data = None
    skipped = []
    chunks = walk_chunks(buf)
    while True:
        try:
            tag, body, length = next(chunks)
        except StopIteration:
            break
        except Truncated:
            if fmt is None or data is None:
                raise
            # damaged trailer after both required chunks; the audio is intact
            break
        if tag == "fmt " and fmt is None:
            fmt = FormatChunk.unpack(buf[body : body + length])
        elif tag == "data" and data is None:
            data = buf[body : body + length]
        else:
            skipped.append(tag)
    if fmt is None:
        raise MissingChunk("no 'fmt ' chunk")
    if data is None:
        raise MissingChunk("no 'data' chunk")
    return WavFile(fmt, data, tuple(skipped), riff_size)


def write_wav(wav: WavFile) -> bytes:
    wav.format.validate()
    data = bytes(wav.data)
    pad = b"\x00" * (len(data) & 1)
    header = b"".join(
        [
            b"RIFF",
            struct.pack("<I", 36 + len(data) + len(pad)),
            b"WAVE",
            _CHUNK_HEADER.pack(b"fmt ", _FMT.size),
            wav.format.pack(),
            _CHUNK_HEADER.pack(b"data", len(data)),
        ]
    )
    return header + data + pad


def read_wav(path) -> WavFile:
    with open(path, "rb") as fh:
        return parse_wav(fh.read())


def save_wav(path, wav: WavFile) -> int:
    out = write_wav(wav)
    with open(path, "wb") as fh:
        fh.write(out)
    return len(out)


def format_lines(fmt: FormatChunk) -> list[str]:
    kind = {1: "mono", 2: "stereo"}.get(fmt.channels, f"{fmt.channels}-channel")
    return [
        f"audio format:    {fmt.audio_format} ({'PCM' if fmt.audio_format == PCM else 'unknown'})",
        f"channels:        {fmt.channels} ({kind})",
        f"sample rate:     {fmt.sample_rate} Hz",
        f"byte rate:       {fmt.byte_rate} bytes/s",
        f"block align:     {fmt.block_align} bytes",
        f"bits per sample: {fmt.bits_per_sample}",
    ]


def describe(wav: WavFile) -> str:
    fmt = wav.format
    lines = format_lines(fmt) + [
        f"data length:     {len(wav.data)} bytes",
        f"duration:        {wav.duration:.3f} s",
    ]
    if wav.skipped_chunks:
        lines.append(f"skipped chunks:  {', '.join(repr(t) for t in wav.skipped_chunks)}")
    for problem in fmt.problems():
        lines.append(f"warning: {problem}")
    if wav.declared_riff_size is not None:
        # chunk lengths are authoritative; the RIFF total is only cross-checked
        expected = wav.file_size - 8
        if wav.declared_riff_size != expected and not wav.skipped_chunks:
            lines.append(
                f"warning: RIFF length field is {wav.declared_riff_size}, "
                f"chunk layout implies {expected}"
            )
    return "\n".join(lines)
