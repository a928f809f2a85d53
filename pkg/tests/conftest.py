import struct

import pytest

_ACCEPTANCE = []


def canonical_wav(data: bytes, sample_rate=8000, channels=1, bits=8) -> bytes:
    """Lay out a 44-byte-header WAV image field by field, independent of the writer."""
    block_align = channels * bits // 8
    pad = b"\x00" if len(data) % 2 else b""
    return (
        b"RIFF"
        + struct.pack("<I", 36 + len(data) + len(pad))
        + b"WAVE"
        + b"fmt "
        + struct.pack("<I", 16)
        + struct.pack("<H", 1)
        + struct.pack("<H", channels)
        + struct.pack("<I", sample_rate)
        + struct.pack("<I", sample_rate * block_align)
        + struct.pack("<H", block_align)
        + struct.pack("<H", bits)
        + b"data"
        + struct.pack("<I", len(data))
        + data
        + pad
    )


@pytest.fixture
def acceptance():
    """Record a one-line verdict for an acceptance criterion."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        verdict = "PASS" if ok else "FAIL"
        line = f"[{verdict}] {number}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
