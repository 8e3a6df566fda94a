"""Flat-file serialization of time series and sampled drives.

CSV schema (fixed header, LF newlines, floats at 17 significant digits so a
round trip reproduces every double bit-exactly):

    t,rho00_re,rho00_im,rho01_re,rho01_im,rho10_re,rho10_im,rho11_re,rho11_im,purity,c_l1,c_frobenius

JSON output is an array of per-sample objects with the same field names.
Sampled drives are JSON documents {"samples": [{"t": ..., "h00_re": ...,
..., "h11_im": ...}, ...]}.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core import TimeSeries
from .errors import BadParam, ConfigInvalid
from .liouville import Sampled

CSV_HEADER = (
    "t,rho00_re,rho00_im,rho01_re,rho01_im,rho10_re,rho10_im,"
    "rho11_re,rho11_im,purity,c_l1,c_frobenius"
)
CSV_FIELDS = tuple(CSV_HEADER.split(","))

DRIVE_FIELDS = ("t", "h00_re", "h00_im", "h01_re", "h01_im",
                "h10_re", "h10_im", "h11_re", "h11_im")


def fmt17(x: float) -> str:
    """17 significant digits: enough to reproduce any double exactly."""
    return f"{x:.17g}"


def _series_rows(series: TimeSeries):
    for s in series:
        yield (
            s.t,
            s.rho[0, 0].real, s.rho[0, 0].imag,
            s.rho[0, 1].real, s.rho[0, 1].imag,
            s.rho[1, 0].real, s.rho[1, 0].imag,
            s.rho[1, 1].real, s.rho[1, 1].imag,
            s.purity, s.c_l1, s.c_frob,
        )


def series_csv_text(series: TimeSeries) -> str:
    lines = [CSV_HEADER]
    lines.extend(",".join(fmt17(v) for v in row) for row in _series_rows(series))
    return "\n".join(lines) + "\n"


def write_series_csv(series: TimeSeries, path: str | Path) -> None:
    Path(path).write_bytes(series_csv_text(series).encode("ascii"))


def series_json_text(series: TimeSeries) -> str:
    records = [dict(zip(CSV_FIELDS, row)) for row in _series_rows(series)]
    return json.dumps(records, indent=1) + "\n"


def write_series_json(series: TimeSeries, path: str | Path) -> None:
    Path(path).write_text(series_json_text(series), encoding="ascii")


def read_series_csv(path: str | Path) -> TimeSeries:
    """Read a CSV in the schema above back into a TimeSeries.

    Values re-read from a file written by write_series_csv compare equal to
    the originals bit for bit.
    """
    text = Path(path).read_text(encoding="ascii")
    lines = [ln for ln in text.split("\n") if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ConfigInvalid(
            f"CSV header mismatch in {path}: expected {CSV_HEADER!r}, "
            f"got {(lines[0] if lines else '')!r}"
        )
    n = len(lines) - 1
    data = np.empty((n, len(CSV_FIELDS)))
    for i, ln in enumerate(lines[1:]):
        parts = ln.split(",")
        if len(parts) != len(CSV_FIELDS):
            raise ConfigInvalid(f"row {i + 2} of {path} has {len(parts)} fields, "
                                f"expected {len(CSV_FIELDS)}")
        try:
            data[i] = [float(v) for v in parts]
        except ValueError as exc:
            raise ConfigInvalid(f"row {i + 2} of {path}: {exc}") from exc
    rho = _rho_from_columns(data)
    return TimeSeries(t=data[:, 0], rho=rho, purity=data[:, 9],
                      c_l1=data[:, 10], c_frob=data[:, 11])


def _rho_from_columns(data: np.ndarray) -> np.ndarray:
    # assign through the real/imag views: re + 1j*im would flip -0.0 to +0.0
    # and break the bit-exact round trip
    rho = np.zeros((len(data), 2, 2), dtype=complex)
    for col, (i, j, part) in enumerate(
        ((0, 0, "real"), (0, 0, "imag"), (0, 1, "real"), (0, 1, "imag"),
         (1, 0, "real"), (1, 0, "imag"), (1, 1, "real"), (1, 1, "imag")),
        start=1,
    ):
        getattr(rho, part)[:, i, j] = data[:, col]
    return rho


def read_states_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    """Read (t, rho) rows from a CSV whose header is either the full schema
    or its first nine columns (t plus the eight rho components).

    Returns (times, matrices) without validating the states; callers decide
    the tolerance to wrap them with.
    """
    text = Path(path).read_text(encoding="ascii")
    lines = [ln for ln in text.split("\n") if ln]
    state_header = ",".join(CSV_FIELDS[:9])
    if not lines or lines[0] not in (CSV_HEADER, state_header):
        raise ConfigInvalid(
            f"CSV header mismatch in {path}: expected {CSV_HEADER!r} or "
            f"{state_header!r}"
        )
    ncols = len(lines[0].split(","))
    n = len(lines) - 1
    data = np.empty((n, ncols))
    for i, ln in enumerate(lines[1:]):
        parts = ln.split(",")
        if len(parts) != ncols:
            raise ConfigInvalid(f"row {i + 2} of {path} has {len(parts)} fields, "
                                f"expected {ncols}")
        try:
            data[i] = [float(v) for v in parts]
        except ValueError as exc:
            raise ConfigInvalid(f"row {i + 2} of {path}: {exc}") from exc
    return data[:, 0], _rho_from_columns(data)


def read_sampled_drive(path: str | Path) -> Sampled:
    """Load a sampled drive from a JSON file of {"samples": [...]} records."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigInvalid(f"cannot read drive file {path}: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"samples"}:
        raise ConfigInvalid('drive file must be an object with the single key "samples"')
    return sampled_from_records(doc["samples"])


def sampled_from_records(records: list) -> Sampled:
    """Build a Sampled drive from a list of {t, h00_re, ..., h11_im} objects."""
    if not isinstance(records, list) or not records:
        raise ConfigInvalid('"samples" must be a non-empty array')
    times = np.empty(len(records))
    mats = np.empty((len(records), 2, 2), dtype=complex)
    for i, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise ConfigInvalid(f"samples[{i}] must be an object")
        unknown = set(rec) - set(DRIVE_FIELDS)
        if unknown:
            raise ConfigInvalid(f"samples[{i}] has unknown keys {sorted(unknown)}")
        missing = set(DRIVE_FIELDS) - set(rec)
        if missing:
            raise ConfigInvalid(f"samples[{i}] is missing keys {sorted(missing)}")
        vals = {}
        for k in DRIVE_FIELDS:
            v = rec[k]
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ConfigInvalid(f"samples[{i}].{k} must be a number, got {v!r}")
            vals[k] = float(v)
        times[i] = vals["t"]
        mats[i, 0, 0] = vals["h00_re"] + 1j * vals["h00_im"]
        mats[i, 0, 1] = vals["h01_re"] + 1j * vals["h01_im"]
        mats[i, 1, 0] = vals["h10_re"] + 1j * vals["h10_im"]
        mats[i, 1, 1] = vals["h11_re"] + 1j * vals["h11_im"]
    try:
        return Sampled(times=times, matrices=mats)
    except BadParam as exc:
        raise ConfigInvalid(f"invalid sampled drive: {exc}") from exc
