"""Command-line front end.

Subcommands: gabor, wigner, husimi, quantize, portrait, fiducials.  Data
goes to --out (or stdout with "-"); residual diagnostics go to stderr.

Exit codes: 0 success, 2 input error, 3 precondition violation,
4 internal tolerance failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .distributions import husimi, overlap_distribution, portrait, portrait_of_symbol, wigner
from .errors import InputFormatError, ToleranceError
from .fiducials import FiducialSpec, realize_fiducial
from .gabor import gabor_transform, isometry_defect
from .hilbert import dft, norm
from .io_formats import (
    format_complex_matrix_csv,
    format_real_map_csv,
    format_vector_csv,
    pgm_bytes,
    read_complex_matrix_csv,
    read_signal,
    read_vector_csv,
)
from .quantize import (
    Weight,
    coherent_state_weight,
    parity_weight,
    quantize,
    quantize_momentum,
    quantize_position,
)
from .signals import column_energy, dominant_rows, envelope_spectrum, period_estimate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_TOLERANCE = 4

_TWO_PATH_TOL = 1e-10


def _emit(out: str, payload: str | bytes) -> None:
    if out == "-":
        if isinstance(payload, bytes):
            sys.stdout.buffer.write(payload)
        else:
            sys.stdout.write(payload)
        return
    path = Path(out)
    if isinstance(payload, bytes):
        path.write_bytes(payload)
    else:
        path.write_text(payload)


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _load_signal(args) -> np.ndarray:
    signal = read_signal(args.infile)
    if args.d is not None and args.d != signal.shape[0]:
        if args.truncate and args.d < signal.shape[0]:
            signal = signal[: args.d]
        elif args.pad and args.d > signal.shape[0]:
            signal = np.concatenate([signal, np.zeros(args.d - signal.shape[0], complex)])
        else:
            raise InputFormatError(
                f"signal has {signal.shape[0]} samples but --d {args.d} was requested; "
                "pass --truncate or --pad to adjust explicitly")
    return signal


def _resolve_fiducial(text: str, d: int) -> np.ndarray:
    if text.startswith("custom:"):
        spec = FiducialSpec.custom(read_vector_csv(text[len("custom:"):]))
    else:
        spec = FiducialSpec.parse(text)
    return realize_fiducial(spec, d)


def _resolve_weight(text: str, d: int) -> Weight:
    if text == "parity":
        return parity_weight(d)
    if text.startswith("cs:"):
        return coherent_state_weight(_resolve_fiducial(text[len("cs:"):], d))
    if text.startswith("file:"):
        values = read_complex_matrix_csv(text[len("file:"):])
        if values.shape[0] != d:
            raise InputFormatError(f"weight file has d={values.shape[0]}, expected {d}")
        return Weight(values)
    raise InputFormatError(f"unknown weight selector {text!r}")


def _resolve_symbol(text: str, d: int):
    """Return (values, kind); kind is general / momentum / position."""
    if text == "ones":
        return np.ones((d, d), dtype=complex), "general"
    if text == "delta":
        f = np.zeros((d, d), dtype=complex)
        f[0, 0] = d  # unit mass under the 1/d-weighted counting measure
        return f, "general"
    if text.startswith("file:"):
        values = read_complex_matrix_csv(text[len("file:"):])
        if values.shape[0] != d:
            raise InputFormatError(f"symbol file has d={values.shape[0]}, expected {d}")
        return values, "general"
    for prefix in ("momentum", "position"):
        if text.startswith(prefix + ":"):
            arg = text[len(prefix) + 1:]
            if arg == "index":
                vec = np.arange(d, dtype=complex)
            elif arg == "index2":
                vec = np.arange(d, dtype=complex) ** 2
            elif arg == "fourier":
                vec = np.exp(2j * np.pi * np.arange(d) / d)
            elif arg.startswith("file:"):
                vec = read_vector_csv(arg[len("file:"):])
                if vec.shape[0] != d:
                    raise InputFormatError(f"symbol vector has length {vec.shape[0]}, expected {d}")
            else:
                raise InputFormatError(f"unknown {prefix} symbol {arg!r}")
            return vec, prefix
    raise InputFormatError(f"unknown symbol selector {text!r}")


def cmd_gabor(args) -> int:
    signal = _load_signal(args)
    d = signal.shape[0]
    window = _resolve_fiducial(args.fiducial, d)
    magnitude = np.abs(gabor_transform(signal, window))
    if args.format == "pgm":
        _emit(args.out, pgm_bytes(magnitude))
    else:
        _emit(args.out, format_real_map_csv(magnitude))
    _diag(f"isometry_residual {isometry_defect(signal, window):.3e}")
    power = envelope_spectrum(column_energy(magnitude))
    rows = dominant_rows(power)
    _diag(f"dominant_rows {' '.join(map(str, rows)) if rows else '-'}")
    period = period_estimate(d, rows)
    _diag(f"period_estimate {period if period is not None else '-'}")
    return EXIT_OK


def cmd_wigner(args) -> int:
    signal = _load_signal(args)
    w_map = wigner(signal)
    _emit(args.out, format_real_map_csv(w_map))
    pos = np.abs(signal) ** 2
    mom = np.abs(dft(signal)) ** 2
    _diag(f"marginal_residual_position {np.abs(w_map.sum(axis=0) - pos).max():.3e}")
    _diag(f"marginal_residual_momentum {np.abs(w_map.sum(axis=1) - mom).max():.3e}")
    return EXIT_OK


def cmd_husimi(args) -> int:
    signal = _load_signal(args)
    window = _resolve_fiducial(args.fiducial, signal.shape[0])
    h_map = husimi(signal, window)
    _emit(args.out, format_real_map_csv(h_map))
    _diag(f"normalization_residual {abs(h_map.sum() - norm(signal) ** 2):.3e}")
    return EXIT_OK


def cmd_quantize(args) -> int:
    d = args.d
    weight = _resolve_weight(args.weight, d)
    values, kind = _resolve_symbol(args.symbol, d)
    if kind == "momentum":
        op = quantize_momentum(values, weight)
        f = np.tile(values[:, None], (1, d))
    elif kind == "position":
        op = quantize_position(values, weight)
        f = np.tile(values[None, :], (d, 1))
    else:
        op = quantize(f := values, weight)
    oracle = quantize(f, weight, method="direct")
    two_path = float(np.abs(op - oracle).max())
    _diag(f"two_path_residual {two_path:.3e}")
    if two_path > _TWO_PATH_TOL:
        raise ToleranceError(f"quantization paths disagree by {two_path:.3e}")
    _emit(args.out, format_complex_matrix_csv(op))
    _diag(f"hermiticity_residual {np.abs(op - op.conj().T).max():.3e}")
    _diag(f"trace {np.trace(op).real:.15e} {np.trace(op).imag:+.15e}j")
    return EXIT_OK


def cmd_portrait(args) -> int:
    d = args.d
    weight = _resolve_weight(args.weight, d)
    values, kind = _resolve_symbol(args.symbol, d)
    if kind == "momentum":
        f = np.tile(values[:, None], (1, d))
    elif kind == "position":
        f = np.tile(values[None, :], (d, 1))
    else:
        f = values
    smoothed = portrait_of_symbol(f, weight)
    oracle = portrait(quantize(f, weight), weight)
    two_path = float(np.abs(smoothed - oracle).max())
    _diag(f"two_path_residual {two_path:.3e}")
    if two_path > _TWO_PATH_TOL:
        raise ToleranceError(f"portrait paths disagree by {two_path:.3e}")
    _emit(args.out, format_complex_matrix_csv(smoothed, row_label="m", col_label="n"))
    mass = overlap_distribution(weight).sum() / d
    _diag(f"smoothing_mass_residual {abs(mass - 1.0):.3e}")
    return EXIT_OK


def cmd_fiducials(args) -> int:
    vec = _resolve_fiducial(args.fiducial, args.d)
    _emit(args.out, format_vector_csv(vec))
    _diag(f"norm {norm(vec):.12f}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-quant",
        description="Gabor analysis, phase-space distributions and covariant "
                    "quantization on the discrete torus Z_d x Z_d.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_signal_flags(p):
        p.add_argument("--in", dest="infile", required=True, help="signal file (CSV or JSON)")
        p.add_argument("--d", type=int, help="target dimension (defaults to signal length)")
        p.add_argument("--truncate", action="store_true", help="truncate a longer signal to --d")
        p.add_argument("--pad", action="store_true", help="zero-pad a shorter signal to --d")

    def add_out_flag(p):
        p.add_argument("--out", default="-", help="output path ('-' for stdout)")

    p = sub.add_parser("gabor", help="magnitude spectrogram of a signal")
    add_signal_flags(p)
    p.add_argument("--fiducial", default="von_mises:400",
                   help="analysis window spec (default von_mises:400)")
    p.add_argument("--format", choices=("csv", "pgm"), default="csv")
    add_out_flag(p)
    p.set_defaults(func=cmd_gabor)

    p = sub.add_parser("wigner", help="Wigner distribution of a signal (odd d)")
    add_signal_flags(p)
    add_out_flag(p)
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("husimi", help="Husimi distribution of a signal")
    add_signal_flags(p)
    p.add_argument("--fiducial", required=True, help="window spec, e.g. constant")
    add_out_flag(p)
    p.set_defaults(func=cmd_husimi)

    p = sub.add_parser("quantize", help="operator assigned to a phase-space symbol")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--symbol", required=True,
                   help="ones | delta | file:PATH | momentum:index|index2|fourier|file:PATH "
                        "| position:index|index2|fourier|file:PATH")
    p.add_argument("--weight", required=True, help="parity | cs:<fiducial> | file:PATH")
    add_out_flag(p)
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("portrait", help="smoothed phase-space portrait of a symbol")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--symbol", required=True, help="as for quantize")
    p.add_argument("--weight", required=True, help="parity | cs:<fiducial> | file:PATH")
    add_out_flag(p)
    p.set_defaults(func=cmd_portrait)

    p = sub.add_parser("fiducials", help="realize a fiducial window vector")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--fiducial", required=True, help="spec, e.g. dirichlet:2 or custom:PATH")
    add_out_flag(p)
    p.set_defaults(func=cmd_fiducials)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        _diag(f"input error: {exc}")
        return EXIT_INPUT
    except OSError as exc:
        _diag(f"input error: {exc}")
        return EXIT_INPUT
    except ToleranceError as exc:
        _diag(f"tolerance failure: {exc}")
        return EXIT_TOLERANCE
    except ValueError as exc:
        _diag(f"precondition violated: {exc}")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
