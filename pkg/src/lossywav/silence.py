"""Silence compression: run-length coding of near-silent 8-bit samples.

Samples within ``threshold`` of the silence center (0x80 for unsigned 8-bit
PCM) count as silent. Once ``start_threshold`` silent samples appear in a row,
a run opens and is written as ``silence_code, count`` pairs; it stays open
through short bursts of noise and closes only after ``stop_threshold``
consecutive non-silent samples. The decoder writes the center value back
``count`` times, so the output length always matches the input even though
the run's contents are lost.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSilenceParams, TruncatedRun

MAX_RUN = 255


@dataclass(frozen=True)
class SilenceParams:
    silence_center: int = 0x80
    threshold: int = 4
    silence_code: int = 0xFF
    start_threshold: int = 5
    stop_threshold: int = 2

    def __post_init__(self):
        for name in ("silence_center", "threshold", "silence_code"):
            value = getattr(self, name)
            if not isinstance(value, int) or not 0 <= value <= 255:
                raise InvalidSilenceParams(f"{name} must be a byte value, got {value!r}")
        lo = self.silence_center - self.threshold
        hi = self.silence_center + self.threshold
        if lo < 0 or hi > 255:
            raise InvalidSilenceParams(
                f"silence band {lo}..{hi} falls outside 0..255"
            )
        if lo <= self.silence_code <= hi:
            raise InvalidSilenceParams(
                f"silence code {self.silence_code:#04x} lies inside the silence band"
            )
        for name in ("start_threshold", "stop_threshold"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise InvalidSilenceParams(f"{name} must be a positive integer, got {value!r}")

    @property
    def literal_for_code(self) -> int:
        """Byte written in place of a raw sample equal to the silence code."""
        return self.silence_code - 1 if self.silence_code > 0 else 1


DEFAULT_PARAMS = SilenceParams()


def is_silence(sample: int, params: SilenceParams = DEFAULT_PARAMS) -> bool:
    return abs(sample - params.silence_center) <= params.threshold


def _emit_run(out: bytearray, length: int, code: int) -> None:
    while length > MAX_RUN:
        out += bytes((code, MAX_RUN))
        length -= MAX_RUN
    out += bytes((code, length))


def encode_silence(samples: bytes, params: SilenceParams = DEFAULT_PARAMS) -> bytes:
    samples = bytes(samples)
    n = len(samples)
    lo = params.silence_center - params.threshold
    hi = params.silence_center + params.threshold
    code = params.silence_code
    substitute = params.literal_for_code
    start, stop = params.start_threshold, params.stop_threshold
    silent = [lo <= s <= hi for s in samples]

    out = bytearray()
    # first index of the current streak of silent samples not yet written
    streak = 0
    i = 0
    while i < n:
        if not silent[i]:
            # a silent streak too short to open a run passes through as-is
            out += samples[streak:i]
            s = samples[i]
            out.append(substitute if s == code else s)
            i += 1
            streak = i
            continue
        if i - streak + 1 < start:
            i += 1
            continue
        # the held-back streak is long enough: it becomes the head of a run
        run_start = streak
        j = i + 1
        run_end = j  # exclusive end of the run, i.e. just past its last silent sample
        noise = 0
        while j < n:
            if silent[j]:
                noise = 0
                run_end = j + 1
            else:
                noise += 1
                if noise == stop:
                    break
            j += 1
        _emit_run(out, run_end - run_start, code)
        i = run_end
        streak = i
    out += samples[streak:]
    return bytes(out)


def decode_silence(stream: bytes, params: SilenceParams = DEFAULT_PARAMS) -> bytes:
    stream = bytes(stream)
    code = params.silence_code
    center = bytes((params.silence_center,))
    out = bytearray()
    i = 0
    n = len(stream)
    while i < n:
        b = stream[i]
        if b == code:
            if i + 1 >= n:
                raise TruncatedRun(f"silence code at offset {i} has no count byte")
            out += center * stream[i + 1]
            i += 2
        else:
            out.append(b)
            i += 1
    return bytes(out)
