"""Size/ratio reporting shared by ``compress`` and ``bench``."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput


@dataclass(frozen=True)
class CompressionReport:
    input_bytes: int
    output_bytes: int
    ratio_percent: int

    def lines(self) -> list[str]:
        return [
            f"Input file size:   {self.input_bytes} bytes",
            f"Output file size:  {self.output_bytes} bytes",
            f"Compression ratio: {self.ratio_percent}%",
        ]


def savings_percent(input_bytes: int, output_bytes: int) -> int:
    """Space saved, ``(1 - out/in) * 100``, rounded up to a whole percent.

    Integer arithmetic only, so 50% exactly stays 50 rather than drifting.
    """
    if input_bytes <= 0:
        raise EmptyInput("input size must be positive")
    return -((-100 * (input_bytes - output_bytes)) // input_bytes)


def make_report(input_bytes: int, output_bytes: int) -> CompressionReport:
    return CompressionReport(input_bytes, output_bytes, savings_percent(input_bytes, output_bytes))
