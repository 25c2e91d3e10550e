"""Command-line front end.

Reads an interval signal from CSV, runs the chosen propagation method
over a frequency range, and writes the bounded amplitude spectrum as CSV
or JSON, optionally with a comparison file, an SVG plot of the bound
curves, and a verification report.

Exit codes: 0 success, 1 input error, 2 resource-cap refusal,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .amplitude import BoundedSpectrum, spectrum_bounds
from .intervals import Interval, IntervalSignal
from .transforms import ResourceLimitError
from .verify import verify_signal

__all__ = ["SCHEMAS", "InputError", "IngestError", "RunConfig", "ingest", "run", "main"]

SCHEMAS = ("lo-hi", "value-halfwidth", "value-precision")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    """Bad input file or configuration; maps to exit code 1."""


class IngestError(InputError):
    """Malformed signal file; the message names the offending line."""


@dataclass
class RunConfig:
    input_path: Path
    schema: str = "lo-hi"
    precision: float | None = None
    method: str = "box"
    k_min: int | None = None
    k_max: int | None = None
    out_format: str = "csv"
    plot: bool = False
    vertex_min: bool = False
    mc_samples: int = 0
    seed: int = 0
    output: Path = Path("spectrum")


def _parse_float(cell: str, line_no: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise IngestError(f"line {line_no}: {cell!r} is not a number") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise IngestError(f"line {line_no}: non-finite value {cell!r}")
    return value


def _looks_like_header(row: list[str]) -> bool:
    for cell in row:
        try:
            float(cell)
        except ValueError:
            return True
    return False


def ingest(path, schema: str, precision: float | None = None) -> IntervalSignal:
    """Parse a CSV file into an interval signal.

    One sample per row, comma delimited, optional header (auto-detected
    by a non-numeric first row).  Schemas: ``lo-hi`` (two columns of
    endpoints), ``value-halfwidth`` (two columns, centre and per-row
    halfwidth), ``value-precision`` (one column of crisp values widened
    by the shared ``precision``).
    """
    if schema not in SCHEMAS:
        raise InputError(f"unknown schema {schema!r}; expected one of {SCHEMAS}")
    path = Path(path)
    if not path.exists():
        raise InputError(f"input file not found: {path}")

    with path.open(newline="", encoding="utf-8") as fh:
        rows = [(line_no, row) for line_no, row in enumerate(csv.reader(fh), start=1) if row]
    if not rows:
        raise IngestError(f"{path}: empty input file")
    if _looks_like_header(rows[0][1]):
        rows = rows[1:]
        if not rows:
            raise IngestError(f"{path}: no data rows after header")

    expected_cols = 1 if schema == "value-precision" else 2
    samples = []
    for line_no, row in rows:
        cells = [c.strip() for c in row]
        if len(cells) != expected_cols:
            raise IngestError(
                f"line {line_no}: expected {expected_cols} column(s) for schema "
                f"{schema!r}, got {len(cells)}"
            )
        if schema == "lo-hi":
            lo = _parse_float(cells[0], line_no)
            hi = _parse_float(cells[1], line_no)
            if lo > hi:
                raise IngestError(f"line {line_no}: reversed bounds {lo!r} > {hi!r}")
            samples.append(Interval(lo, hi))
        elif schema == "value-halfwidth":
            value = _parse_float(cells[0], line_no)
            halfwidth = _parse_float(cells[1], line_no)
            if halfwidth < 0:
                raise IngestError(f"line {line_no}: negative halfwidth {halfwidth!r}")
            samples.append(Interval(value - halfwidth, value + halfwidth))
        else:
            xi = 0.0 if precision is None else float(precision)
            if xi < 0:
                raise InputError(f"precision must be nonnegative, got {precision!r}")
            value = _parse_float(cells[0], line_no)
            samples.append(Interval(value - xi, value + xi))

    if schema == "value-precision":
        return IntervalSignal(tuple(samples), precision=0.0 if precision is None else float(precision))
    return IntervalSignal(tuple(samples))


def _fmt(value: float) -> str:
    return repr(float(value))


def _spectrum_rows(spec: BoundedSpectrum) -> list[list[str]]:
    rows = []
    n = spec.signal_length
    for k, b in spec:
        rows.append(
            [
                str(k),
                _fmt(k / n),
                _fmt(b.lo),
                _fmt(b.hi),
                "true" if b.origin_enclosed else "false",
            ]
        )
    return rows


def _metadata(config: RunConfig, spec: BoundedSpectrum) -> dict:
    return {
        "tool": "intervaldft",
        "version": __version__,
        "method": spec.method,
        "signal_length": spec.signal_length,
        "precision": spec.precision,
        "seed": config.seed,
        "schema": config.schema,
        "input": str(config.input_path),
        "k_min": int(spec.ks[0]),
        "k_max": int(spec.ks[-1]),
    }


def _write_spectrum_csv(path: Path, spec: BoundedSpectrum) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["k", "frequency_fraction", "amp_lo", "amp_hi", "origin_enclosed"])
        writer.writerows(_spectrum_rows(spec))


def _write_spectrum_json(path: Path, spec: BoundedSpectrum, config: RunConfig) -> None:
    doc = {
        "metadata": _metadata(config, spec),
        "entries": [
            {
                "k": int(k),
                "frequency_fraction": k / spec.signal_length,
                "amp_lo": b.lo,
                "amp_hi": b.hi,
                "origin_enclosed": b.origin_enclosed,
            }
            for k, b in spec
        ],
    }
    with path.open("w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _comparison_entries(box: BoundedSpectrum, sel: BoundedSpectrum) -> list[dict]:
    entries = []
    n = box.signal_length
    for (k, b), (_, s) in zip(box, sel):
        slack = 1e-9 * (1.0 + b.hi)
        entries.append(
            {
                "k": int(k),
                "frequency_fraction": k / n,
                "box_amp_lo": b.lo,
                "box_amp_hi": b.hi,
                "selective_amp_lo": s.lo,
                "selective_amp_hi": s.hi,
                "box_width": b.width,
                "selective_width": s.width,
                "nested": bool(s.lo >= b.lo - slack and s.hi <= b.hi + slack),
            }
        )
    return entries


def _write_comparison(path: Path, box, sel, out_format: str, config: RunConfig) -> None:
    entries = _comparison_entries(box, sel)
    if out_format == "csv":
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            keys = list(entries[0].keys())
            writer.writerow(keys)
            for e in entries:
                writer.writerow(
                    [
                        str(e["k"]),
                        _fmt(e["frequency_fraction"]),
                        _fmt(e["box_amp_lo"]),
                        _fmt(e["box_amp_hi"]),
                        _fmt(e["selective_amp_lo"]),
                        _fmt(e["selective_amp_hi"]),
                        _fmt(e["box_width"]),
                        _fmt(e["selective_width"]),
                        "true" if e["nested"] else "false",
                    ]
                )
    else:
        doc = {"metadata": _metadata(config, box), "entries": entries}
        doc["metadata"]["method"] = "both"
        with path.open("w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def _write_plot(path: Path, spectra: dict[str, BoundedSpectrum]) -> None:
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8.0, 4.5))
    for method, spec in spectra.items():
        ks = spec.ks
        upper = ax.plot(ks, spec.hi, label=f"{method} upper")[0]
        ax.plot(ks, spec.lo, label=f"{method} lower", color=upper.get_color(), linestyle="--")
        ax.fill_between(ks, spec.lo, spec.hi, color=upper.get_color(), alpha=0.15)
    ax.set_xlabel("frequency index k")
    ax.set_ylabel("amplitude")
    ax.set_title("amplitude spectrum bounds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def run(config: RunConfig) -> int:
    """Execute one configured run; returns the process exit code.

    Any failure removes the artifacts written so far, so a nonzero exit
    never leaves partial outputs behind.
    """
    written: list[Path] = []

    def _cleanup() -> None:
        for p in written:
            try:
                p.unlink()
            except OSError:
                pass

    try:
        if config.method not in ("box", "selective", "brute", "both"):
            raise InputError(f"unknown method {config.method!r}")
        if config.out_format not in ("csv", "json"):
            raise InputError(f"unknown format {config.out_format!r}")
        signal = ingest(config.input_path, config.schema, config.precision)
        n = len(signal)
        k_min = 1 if config.k_min is None else int(config.k_min)
        k_max = (n // 2 - 1) if config.k_max is None else int(config.k_max)
        if not 0 <= k_min <= n // 2 or not 0 <= k_max <= n // 2:
            raise InputError(f"frequency range must lie within 0..{n // 2}, got {k_min}..{k_max}")
        if k_min > k_max:
            raise InputError(
                f"empty frequency range {k_min}..{k_max} for N={n}; "
                "set --k-min/--k-max explicitly"
            )
        ks = range(k_min, k_max + 1)

        methods = ["selective", "box"] if config.method == "both" else [config.method]
        spectra = {
            m: spectrum_bounds(signal, m, ks, vertex_min=config.vertex_min) for m in methods
        }

        base = Path(config.output)
        if base.parent != Path("."):
            base.parent.mkdir(parents=True, exist_ok=True)
        ext = "." + config.out_format
        if config.method == "both":
            targets = {m: base.with_name(base.name + f"_{m}{ext}") for m in methods}
        else:
            targets = {config.method: base.with_name(base.name + ext)}
        for m, target in targets.items():
            written.append(target)
            if config.out_format == "csv":
                _write_spectrum_csv(target, spectra[m])
            else:
                _write_spectrum_json(target, spectra[m], config)
            print(f"wrote {target}")

        if config.method == "both":
            cmp_path = base.with_name(base.name + f"_comparison{ext}")
            written.append(cmp_path)
            _write_comparison(cmp_path, spectra["box"], spectra["selective"], config.out_format, config)
            print(f"wrote {cmp_path}")

        if config.plot:
            plot_path = base.with_name(base.name + ".svg")
            written.append(plot_path)
            _write_plot(plot_path, spectra)
            print(f"wrote {plot_path}")

        if config.mc_samples > 0:
            report = verify_signal(signal, ks, mc_samples=config.mc_samples, seed=config.seed)
            verify_path = base.with_name(base.name + "_verification.json")
            written.append(verify_path)
            with verify_path.open("w", encoding="utf-8") as fh:
                json.dump(report.to_dict(), fh, indent=2)
                fh.write("\n")
            print(f"wrote {verify_path}")
            print(report.to_text())
            if not report.passed:
                raise AssertionError("verification report contains failed checks")

        return EXIT_OK
    except (InputError, OSError) as exc:
        _cleanup()
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        _cleanup()
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except Exception as exc:
        _cleanup()
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervaldft",
        description=(
            "Propagate an interval-valued signal through the discrete Fourier "
            "transform and emit guaranteed bounds on its amplitude spectrum."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--input", required=True, type=Path, help="CSV file with one sample per row")
    parser.add_argument(
        "--schema",
        choices=SCHEMAS,
        default="lo-hi",
        help="column layout of the input file (default: lo-hi)",
    )
    parser.add_argument(
        "--precision",
        type=float,
        default=None,
        help="shared halfwidth for the value-precision schema, in signal units",
    )
    parser.add_argument(
        "--method",
        choices=("box", "selective", "brute", "both"),
        default="box",
        help="propagation method (default: box; 'both' also writes a comparison file)",
    )
    parser.add_argument("--k-min", type=int, default=None, help="first frequency index (default: 1)")
    parser.add_argument(
        "--k-max", type=int, default=None, help="last frequency index (default: N//2 - 1)"
    )
    parser.add_argument("--format", choices=("csv", "json"), default="csv", dest="out_format")
    parser.add_argument("--plot", action="store_true", help="also write an SVG of the bound curves")
    parser.add_argument(
        "--paper-compat-min",
        action="store_true",
        dest="vertex_min",
        help=(
            "compute amplitude lower bounds from hull vertices only "
            "(the default uses the exact edge projection, which is tighter)"
        ),
    )
    parser.add_argument(
        "--mc-samples",
        type=int,
        default=0,
        help="if > 0, run a Monte-Carlo enclosure check with this many samples",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for the verification sampler")
    parser.add_argument(
        "--output",
        type=Path,
        default=Path("spectrum"),
        help="output base path; extensions are appended (default: spectrum)",
    )
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    config = RunConfig(
        input_path=args.input,
        schema=args.schema,
        precision=args.precision,
        method=args.method,
        k_min=args.k_min,
        k_max=args.k_max,
        out_format=args.out_format,
        plot=args.plot,
        vertex_min=args.vertex_min,
        mc_samples=args.mc_samples,
        seed=args.seed,
        output=args.output,
    )
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
