"""Command-line interface: info | spectra | simulate | toy | verify.

Primary output (JSON or CSV) goes to stdout, diagnostics to stderr.
Exit codes: 0 ok, 2 input error, 3 not positive definite, 4 partition error,
5 epoch error, 6 unstable model, 7 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import connections, io, measures, structured, toys
from .ar import simulate_ar
from .errors import (
    DimensionMismatch,
    EpochMismatch,
    HoicovError,
    IndexOutOfRange,
    KindMismatch,
    MalformedFile,
    NonPositiveDiagonal,
    NotHermitian,
    NotPositiveDefinite,
    PartitionMismatch,
    UnstableModel,
)
from .linalg import FieldKind, HermitianMatrix
from .oracles import run_verification
from .spectra import SweepConfig, periodogram_cross_spectra, spectral_measure_sweep
from .svgplot import write_line_chart

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_PD = 3
EXIT_PARTITION = 4
EXIT_EPOCH = 5
EXIT_UNSTABLE = 6
EXIT_VERIFY = 7

LN2 = math.log(2.0)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _scaled(value: float, bits: bool) -> float:
    return value / LN2 if bits else value


def _parse_nodes(spec: str, p: int) -> list[int]:
    if spec == "all":
        return list(range(p))
    return [int(spec)]


def cmd_info(args) -> int:
    matrix = io.load_matrix(args.matrix)
    if args.kind_override == "complex" and matrix.kind is FieldKind.REAL:
        matrix = HermitianMatrix(matrix.values, FieldKind.COMPLEX)
    part = io.parse_partition(args.partition) if args.partition else None
    bits = args.bits
    rep = measures.measure_report(matrix, ridge=args.ridge)
    doc = {
        "p": matrix.p,
        "kind": matrix.kind.value,
        "units": "bits" if bits else "nats",
        "measures": {
            "tc": _scaled(rep.tc, bits),
            "dtc": _scaled(rep.dtc, bits),
            "oinfo": _scaled(rep.oinfo, bits),
            "tse": _scaled(rep.tse, bits),
        },
    }
    if part is not None:
        srep = structured.structured_report(matrix, part, ridge=args.ridge)
        doc["partition"] = [list(g) for g in part.groups]
        doc["structured"] = {
            "group_count": srep.group_count,
            "sigma_tc": _scaled(srep.sigma_tc, bits),
            "sigma_dtc": _scaled(srep.sigma_dtc, bits),
            "sigma_oinfo": _scaled(srep.sigma_oinfo, bits),
            "sigma_tse": _scaled(srep.sigma_tse, bits),
        }
    if args.node is not None:
        doc["nodes"] = {}
        for i in _parse_nodes(args.node, matrix.p):
            if not 0 <= i < matrix.p:
                raise IndexOutOfRange(f"node {i} outside 0..{matrix.p - 1}")
            pin = connections.pi_report(matrix, i, ridge=args.ridge)
            doc["nodes"][str(i)] = {
                "lambda_rsi": _scaled(measures.lambda_rsi(matrix, i, ridge=args.ridge), bits),
                "oinfo_gradient": _scaled(measures.oinfo_gradient(matrix, i, ridge=args.ridge), bits),
                "pi_tc": _scaled(pin.tc, bits),
                "pi_dtc": _scaled(pin.dtc, bits),
                "pi_oinfo": _scaled(pin.oinfo, bits),
                "pi_tse": _scaled(pin.tse, bits),
            }
    if args.group is not None:
        if part is None:
            raise PartitionMismatch("--group requires --partition")
        groups = range(part.K) if args.group == "all" else [int(args.group)]
        doc["groups"] = {}
        for k in groups:
            if not 0 <= k < part.K:
                raise IndexOutOfRange(f"group {k} outside 0..{part.K - 1}")
            krep = connections.kappa_report(matrix, part, k, ridge=args.ridge)
            doc["groups"][str(k)] = {
                "sigma_rsi": _scaled(structured.sigma_rsi(matrix, part, k, ridge=args.ridge), bits),
                "kappa_tc": _scaled(krep.tc, bits),
                "kappa_dtc": _scaled(krep.dtc, bits),
                "kappa_oinfo": _scaled(krep.oinfo, bits),
                "kappa_tse": _scaled(krep.tse, bits),
            }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


MEASURE_FLAGS = ("tc", "dtc", "oinfo", "tse", "lambda_rsi", "oinfo_gradient",
                 "pi", "sigma", "kappa", "sigma_rsi")


def _sweep_config(measure_list: list[str], part) -> SweepConfig:
    unknown = [m for m in measure_list if m not in MEASURE_FLAGS]
    if unknown:
        raise MalformedFile(f"unknown measures {unknown}; choose from {MEASURE_FLAGS}")
    chosen = set(measure_list)
    return SweepConfig(
        global_measures=bool(chosen & {"tc", "dtc", "oinfo", "tse"}),
        nodal_lambda_rsi="lambda_rsi" in chosen,
        nodal_oinfo_gradient="oinfo_gradient" in chosen,
        nodal_pi="pi" in chosen,
        partition=part,
        structured="sigma" in chosen,
        group_kappa="kappa" in chosen,
        group_sigma_rsi="sigma_rsi" in chosen,
    )


def cmd_spectra(args) -> int:
    part = io.parse_partition(args.partition) if args.partition else None
    ts = io.read_timeseries_csv(args.timeseries, fs=args.fs,
                                epoch_len=args.epoch_len)
    config = _sweep_config([m.strip() for m in args.measures.split(",") if m.strip()],
                           part)
    cs = periodogram_cross_spectra(ts)
    table = spectral_measure_sweep(cs, config)
    sys.stdout.write(io.sweep_to_csv(table))
    for msg in table.warnings:
        print(f"warning: {msg}", file=sys.stderr)
    if args.plot:
        prefix = Path(args.plot)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        _write_sweep_plots(table, prefix)
    return EXIT_OK


def _write_sweep_plots(table, prefix: Path) -> None:
    groups: dict[str, dict[str, np.ndarray]] = {}
    for name, values in table.columns.items():
        base = name.split("_g")[0] if "_g" in name else name.rstrip("0123456789").rstrip("_")
        family = {
            "tc": "global", "dtc": "global", "oinfo": "global", "tse": "global",
            "sigma_tc": "structured", "sigma_dtc": "structured",
            "sigma_oinfo": "structured", "sigma_tse": "structured",
        }.get(name, base)
        groups.setdefault(family, {})[name] = values
    for family, series in groups.items():
        out = prefix.with_name(f"{prefix.name}_{family}.svg")
        write_line_chart(out, table.frequencies, series,
                         title=family.replace("_", " "),
                         xlabel="frequency (Hz)", ylabel="nats")


def _load_model(spec: str):
    if spec == "toy1":
        return toys.toy1_model()
    if spec == "toy2":
        return toys.toy2_model()[0]
    return io.load_model_config(spec)


def cmd_simulate(args) -> int:
    model = _load_model(args.model)
    ts = simulate_ar(model, args.epochs, args.samples, args.seed,
                     burn_in=args.burn_in)
    io.write_timeseries_csv(ts, args.out, burn_in=args.burn_in)
    print(f"wrote {args.out} ({ts.epochs} epochs x {ts.samples_per_epoch} "
          f"samples x {ts.p} channels)", file=sys.stderr)
    return EXIT_OK


def cmd_toy(args) -> int:
    which = int(args.which)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    result = toys.run_toy(which, args.seed, epochs=args.epochs,
                          samples=args.samples)
    io.write_timeseries_csv(result.timeseries, outdir / "timeseries.csv",
                            burn_in=1000)
    (outdir / "sweep.csv").write_text(io.sweep_to_csv(result.sweep),
                                      encoding="utf-8")
    _write_sweep_plots(result.sweep, outdir / f"toy{which}")
    for check in result.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status}: {check.name} ({check.detail})")
    return EXIT_OK if result.all_passed else 1


def cmd_verify(args) -> int:
    if args.corpus_size < 1:
        return _fail(EXIT_INPUT, f"corpus size must be >= 1, got {args.corpus_size}")
    report = run_verification(args.corpus_size, args.seed)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hoicov",
        description="Higher-order information measures for covariance and "
                    "cross-spectral matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="measures of a single matrix file")
    p_info.add_argument("matrix", help="matrix JSON file")
    p_info.add_argument("--partition", help="JSON index groups (inline or file)")
    p_info.add_argument("--node", help="'all' or a node index for nodal measures")
    p_info.add_argument("--group", help="'all' or a group index for group measures")
    p_info.add_argument("--kind-override", choices=["complex"],
                        help="evaluate a real matrix with the complex convention")
    p_info.add_argument("--ridge", type=float, default=None,
                        help="ridge repair strength for near-singular input")
    p_info.add_argument("--bits", action="store_true",
                        help="display in bits instead of nats")
    p_info.set_defaults(fn=cmd_info)

    p_spec = sub.add_parser("spectra", help="per-frequency measures of a time series")
    p_spec.add_argument("timeseries", help="CSV, columns = channels, rows = samples")
    p_spec.add_argument("--fs", type=float, required=True, help="sampling rate Hz")
    p_spec.add_argument("--epoch-len", type=int, required=True,
                        help="samples per epoch")
    p_spec.add_argument("--partition", help="JSON index groups (inline or file)")
    p_spec.add_argument("--measures", default="tc,dtc,oinfo,tse",
                        help="comma list: tc,dtc,oinfo,tse,lambda_rsi,"
                             "oinfo_gradient,pi,sigma,kappa,sigma_rsi")
    p_spec.add_argument("--plot", help="SVG path prefix for line plots")
    p_spec.set_defaults(fn=cmd_spectra)

    p_sim = sub.add_parser("simulate", help="simulate an AR model to CSV")
    p_sim.add_argument("model", help="model config JSON, or 'toy1'/'toy2'")
    p_sim.add_argument("--epochs", type=int, default=100)
    p_sim.add_argument("--samples", type=int, default=256)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--burn-in", type=int, default=1000)
    p_sim.add_argument("--out", required=True, help="output CSV path")
    p_sim.set_defaults(fn=cmd_simulate)

    p_toy = sub.add_parser("toy", help="run a bundled toy experiment end to end")
    p_toy.add_argument("which", choices=["1", "2"])
    p_toy.add_argument("--seed", type=int, default=0)
    p_toy.add_argument("--outdir", required=True)
    p_toy.add_argument("--epochs", type=int, default=toys.DEFAULT_EPOCHS)
    p_toy.add_argument("--samples", type=int, default=toys.DEFAULT_SAMPLES)
    p_toy.set_defaults(fn=cmd_toy)

    p_ver = sub.add_parser("verify", help="run the oracle discrepancy suite")
    p_ver.add_argument("--corpus-size", type=int, default=400)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (MalformedFile, NotHermitian, KindMismatch, NonPositiveDiagonal,
            DimensionMismatch) as exc:
        return _fail(EXIT_INPUT, str(exc))
    except NotPositiveDefinite as exc:
        return _fail(EXIT_NOT_PD, str(exc))
    except (PartitionMismatch, IndexOutOfRange) as exc:
        return _fail(EXIT_PARTITION, str(exc))
    except EpochMismatch as exc:
        return _fail(EXIT_EPOCH, str(exc))
    except UnstableModel as exc:
        return _fail(EXIT_UNSTABLE, str(exc))
    except HoicovError as exc:
        return _fail(EXIT_INPUT, str(exc))


if __name__ == "__main__":
    sys.exit(main())
