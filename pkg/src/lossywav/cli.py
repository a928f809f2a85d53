"""Command line interface.

Exit codes: 0 success, 1 I/O problem, 2 malformed or unsupported file,
3 bad codec parameters.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import container, wav
from .errors import FormatError, ParameterError, UnsupportedFormat
from .estimators import CompandingCompressor, SilenceCompressor, compress_wav, decompress_wav
from .report import make_report

EXIT_OK, EXIT_IO, EXIT_FORMAT, EXIT_PARAMS = 0, 1, 2, 3

BENCH_COLUMNS = ("file", "codec", "bits", "input_bytes", "output_bytes", "ratio_percent")


def _make_estimator(codec: str, args):
    if codec == "silence":
        return SilenceCompressor(
            threshold=args.threshold,
            start_threshold=args.start_threshold,
            stop_threshold=args.stop_threshold,
        ).fit()
    return CompandingCompressor(bits=args.bits).fit()


def _load_source(data: bytes) -> wav.WavFile:
    source = wav.parse_wav(data)
    if "CMPR" in source.skipped_chunks:
        raise UnsupportedFormat("input is already a compressed file")
    return source


def cmd_inspect(args) -> int:
    data = Path(args.path).read_bytes()
    try:
        compressed = container.read_compressed(data)
    except container.NotCompressed:
        print(wav.describe(wav.parse_wav(data)))
        return EXIT_OK
    print(f"compressed file ({container.CODEC_NAMES[compressed.codec_id]} codec)")
    if compressed.codec_id == container.COMPAND:
        print(f"bits per code:   {compressed.bits}")
    else:
        p = compressed.params
        print(f"threshold:       {p.threshold}")
        print(f"start threshold: {p.start_threshold}")
        print(f"stop threshold:  {p.stop_threshold}")
    print(f"original length: {compressed.original_data_len} bytes")
    print(f"payload length:  {len(compressed.payload)} bytes")
    print("\n".join(wav.format_lines(compressed.source_format)))
    return EXIT_OK


def cmd_compress(args) -> int:
    estimator = _make_estimator(args.codec, args)
    raw = Path(args.input).read_bytes()
    compressed = compress_wav(_load_source(raw), estimator)
    out = container.write_compressed(compressed)
    Path(args.output).write_bytes(out)
    for line in make_report(len(raw), len(out)).lines():
        print(line)
    return EXIT_OK


def cmd_decompress(args) -> int:
    compressed = container.read_compressed(Path(args.input).read_bytes())
    restored = decompress_wav(compressed)
    size = wav.save_wav(args.output, restored)
    print(f"Restored file size: {size} bytes ({len(restored.data)} sample bytes)")
    return EXIT_OK


def bench_rows(directory: Path, configs, warn=None):
    """Yield one result dict per (file, codec configuration), files in name order."""
    files = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix.lower() == ".wav")
    for path in files:
        try:
            raw = path.read_bytes()
            source = _load_source(raw)
            results = []
            for codec, estimator in configs:
                out = container.write_compressed(compress_wav(source, estimator))
                report = make_report(len(raw), len(out))
                results.append(
                    {
                        "file": path.name,
                        "codec": codec,
                        "bits": getattr(estimator, "bits", 0) if codec == "compand" else 0,
                        "input_bytes": report.input_bytes,
                        "output_bytes": report.output_bytes,
                        "ratio_percent": report.ratio_percent,
                    }
                )
        except (OSError, FormatError) as exc:
            if warn is not None:
                warn(f"skipping {path.name}: {exc}")
            continue
        yield from results


def cmd_bench(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return EXIT_IO
    configs = []
    if args.codec in ("silence", "both"):
        configs.append(("silence", _make_estimator("silence", args)))
    if args.codec in ("compand", "both"):
        for bits in args.bits_list or range(1, 9):
            configs.append(("compand", CompandingCompressor(bits=bits).fit()))

    warn = lambda msg: print(f"warning: {msg}", file=sys.stderr)
    rows = list(bench_rows(directory, configs, warn))
    if not rows:
        print(f"error: no usable WAV files in {directory}", file=sys.stderr)
        return EXIT_IO
    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        width = max(len("file"), *(len(r["file"]) for r in rows))
        print(f"{'file':<{width}}  codec    bits  input_bytes  output_bytes  ratio_percent")
        for r in rows:
            bits = str(r["bits"]) if r["codec"] == "compand" else "-"
            print(
                f"{r['file']:<{width}}  {r['codec']:<7}  {bits:>4}  {r['input_bytes']:>11}"
                f"  {r['output_bytes']:>12}  {r['ratio_percent']:>12}%"
            )
    return EXIT_OK


def _add_silence_options(p):
    p.add_argument("--threshold", type=int, default=4, help="max distance from 0x80 counted as silence")
    p.add_argument("--start-threshold", type=int, default=5, help="silent samples needed to open a run")
    p.add_argument("--stop-threshold", type=int, default=2, help="loud samples needed to close a run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lossywav", description="Silence and companding compression for 8-bit PCM WAV files."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="show the header fields of a WAV or compressed file")
    p.add_argument("path")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("compress", help="compress an 8-bit mono WAV file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--codec", choices=("silence", "compand"), default="compand")
    p.add_argument("--bits", type=int, default=4, help="code width for companding (1-8)")
    _add_silence_options(p)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", help="restore a plain WAV file from a compressed one")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("bench", help="tabulate compression ratios over a directory of WAV files")
    p.add_argument("directory")
    p.add_argument("--codec", choices=("silence", "compand", "both"), default="both")
    p.add_argument(
        "--bits", dest="bits_list", type=int, action="append",
        help="companding code width; repeat for several (default: 1 through 8)",
    )
    _add_silence_options(p)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
