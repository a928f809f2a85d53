"""Lossy compression of 8-bit PCM WAV audio by silence run-length coding
and logarithmic companding."""

from .companding import (
    CompandTables,
    MappingParams16,
    build_tables,
    compand_decode,
    compand_encode,
    map16,
    max_error,
    unmap16,
)
from .container import CompressedFile, read_compressed, write_compressed
from .estimators import CompandingCompressor, SilenceCompressor, compress_wav, decompress_wav
from .report import CompressionReport, make_report
from .silence import SilenceParams, decode_silence, encode_silence, is_silence
from .wav import FormatChunk, WavFile, describe, parse_wav, write_wav

__all__ = [
    "CompandTables",
    "CompandingCompressor",
    "CompressedFile",
    "CompressionReport",
    "FormatChunk",
    "MappingParams16",
    "SilenceCompressor",
    "SilenceParams",
    "WavFile",
    "build_tables",
    "compand_decode",
    "compand_encode",
    "compress_wav",
    "decode_silence",
    "decompress_wav",
    "describe",
    "encode_silence",
    "is_silence",
    "make_report",
    "map16",
    "max_error",
    "parse_wav",
    "read_compressed",
    "unmap16",
    "write_compressed",
    "write_wav",
]
