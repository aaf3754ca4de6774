"""File formats: matrix JSON, AR-model JSON, time-series CSV, sweep CSV.

Nats are the only on-disk unit. All writers format floats with repr so that
identical values produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .ar import ARModel, Sinusoid, TimeSeriesEpochs
from .errors import EpochMismatch, MalformedFile
from .linalg import FieldKind, HermitianMatrix
from .partition import Partition
from .spectra import SweepTable


def load_matrix(path) -> HermitianMatrix:
    """Read a matrix JSON file: {"p", "kind", "data": [[re, im], ...]} row-major."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedFile(f"cannot read matrix file {path}: {exc}") from exc
    try:
        p = int(doc["p"])
        kind_name = doc["kind"]
        data = doc["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFile(f"matrix file missing p/kind/data: {exc}") from exc
    if kind_name not in ("real", "complex"):
        raise MalformedFile(f"kind must be 'real' or 'complex', got {kind_name!r}")
    if len(data) != p * p:
        raise MalformedFile(f"expected {p * p} entries, got {len(data)}")
    try:
        pairs = [(float(re), float(im)) for re, im in data]
    except (TypeError, ValueError) as exc:
        raise MalformedFile(f"entries must be [re, im] pairs: {exc}") from exc
    kind = FieldKind(kind_name)
    if kind is FieldKind.REAL and any(im != 0.0 for _, im in pairs):
        raise MalformedFile("kind=real requires every imaginary part to be 0")
    values = np.array([complex(re, im) for re, im in pairs]).reshape(p, p)
    return HermitianMatrix(values, kind)


def save_matrix(h: HermitianMatrix, path) -> None:
    data = [[float(v.real), float(v.imag)] for v in h.values.flatten()]
    doc = {"p": h.p, "kind": h.kind.value, "data": data}
    Path(path).write_text(json.dumps(doc) + "\n", encoding="utf-8")


def parse_partition(text: str) -> Partition:
    """Partition from a JSON list of index lists, inline or in a file."""
    try:
        groups = json.loads(text)
    except json.JSONDecodeError:
        path = Path(text)
        if not path.exists():
            raise MalformedFile(
                f"partition is neither valid JSON nor an existing file: {text!r}"
            ) from None
        try:
            groups = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedFile(f"cannot read partition file: {exc}") from exc
    if (not isinstance(groups, list)
            or not all(isinstance(g, list) and g for g in groups)):
        raise MalformedFile("partition must be a list of non-empty index lists")
    return Partition.from_groups(groups)


def load_model_config(path) -> ARModel:
    """AR model from JSON: {p, order, coeffs, innovation_cov?, sinusoids?, fs}."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedFile(f"cannot read model config {path}: {exc}") from exc
    try:
        p = int(doc["p"])
        order = int(doc["order"])
        coeffs = [np.array(a, dtype=float) for a in doc["coeffs"]]
        fs = float(doc["fs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFile(f"model config missing p/order/coeffs/fs: {exc}") from exc
    if len(coeffs) != order or any(a.shape != (p, p) for a in coeffs):
        raise MalformedFile(f"coeffs must be {order} matrices of shape {p}x{p}")
    cov = doc.get("innovation_cov")
    cov = np.array(cov, dtype=float) if cov is not None else None
    sinusoids = tuple(
        Sinusoid(node=int(s["node"]), amplitude=float(s["amp"]),
                 freq_hz=float(s["freq_hz"]), phase=float(s.get("phase", 0.0)))
        for s in doc.get("sinusoids", ())
    )
    return ARModel(coeffs=tuple(coeffs), innovation_cov=cov,
                   sinusoids=sinusoids, sampling_rate=fs)


def save_model_config(model: ARModel, path) -> None:
    doc = {
        "p": model.p,
        "order": model.order,
        "coeffs": [a.tolist() for a in model.coeffs],
        "innovation_cov": model.innovation_cov.tolist(),
        "sinusoids": [
            {"node": s.node, "amp": s.amplitude, "freq_hz": s.freq_hz,
             "phase": s.phase}
            for s in model.sinusoids
        ],
        "fs": model.sampling_rate,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def write_timeseries_csv(ts: TimeSeriesEpochs, path, *, burn_in: int) -> None:
    """Channel-per-column CSV (epochs concatenated) plus a metadata sidecar."""
    path = Path(path)
    lines = [",".join(f"ch{i}" for i in range(ts.p))]
    flat = ts.data.reshape(-1, ts.p)
    for row in flat:
        lines.append(",".join(repr(float(v)) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    meta = {
        "seed": ts.seed,
        "burn_in": burn_in,
        "fs": ts.sampling_rate,
        "epochs": ts.epochs,
        "samples_per_epoch": ts.samples_per_epoch,
        "p": ts.p,
    }
    sidecar = path.with_name(path.name + ".meta.json")
    sidecar.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")


def read_timeseries_csv(path, *, fs: float, epoch_len: int,
                        seed: int = 0) -> TimeSeriesEpochs:
    """Read channels-as-columns CSV and split the rows into epochs."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedFile(f"cannot read time series {path}: {exc}") from exc
    rows: list[list[float]] = []
    for ln, line in enumerate(text.splitlines()):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cells = line.split(",")
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            if not rows and ln == 0:
                continue  # header row
            raise MalformedFile(f"bad row {ln + 1}: {exc}") from exc
    if not rows:
        raise MalformedFile("time series file contains no data rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MalformedFile("rows have inconsistent column counts")
    data = np.array(rows, dtype=float)
    if epoch_len < 2:
        raise EpochMismatch(f"epoch length must be >= 2, got {epoch_len}")
    if data.shape[0] % epoch_len != 0:
        raise EpochMismatch(
            f"{data.shape[0]} samples not divisible by epoch length {epoch_len}"
        )
    epochs = data.shape[0] // epoch_len
    return TimeSeriesEpochs(data.reshape(epochs, epoch_len, width), fs, seed)


def sweep_to_csv(table: SweepTable) -> str:
    """Sweep table as CSV with warnings in a trailing comment block."""
    names = table.column_names
    lines = [",".join(["freq_hz"] + names)]
    for b, f in enumerate(table.frequencies):
        cells = [repr(float(f))] + [repr(float(table.columns[n][b])) for n in names]
        lines.append(",".join(cells))
    for msg in table.warnings:
        lines.append(f"# warning: {msg}")
    return "\n".join(lines) + "\n"


def sweep_from_csv(text: str) -> SweepTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedFile("empty sweep CSV")
    header = lines[0].split(",")
    if header[0] != "freq_hz":
        raise MalformedFile(f"expected freq_hz header, got {header[0]!r}")
    names = header[1:]
    warnings: list[str] = []
    rows: list[list[float]] = []
    for line in lines[1:]:
        if line.startswith("# warning: "):
            warnings.append(line[len("# warning: "):])
            continue
        rows.append([float(c) for c in line.split(",")])
    data = np.array(rows, dtype=float)
    columns = {name: data[:, j + 1].copy() for j, name in enumerate(names)}
    return SweepTable(data[:, 0].copy(), columns, warnings)
