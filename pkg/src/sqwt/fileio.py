"""Series CSV and spectrum JSON readers and writers.

A series file is one decimal value per line with an optional `value`
header. A spectrum file is a JSON document holding the grid metadata and
per-dyad records; numbers are stored at full precision (shortest
round-trip decimal form) next to a six-decimal display string.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FileFormatError
from .transform import ReconstructionReport, Spectrum
from .waves import GridSpec

_FREQ_SANITY_REL_TOL = 1e-6


def read_series_values(path) -> np.ndarray:
    """Parse a series file into a float64 vector.

    Accepts an optional leading `value` header. Any token that is not a
    finite decimal number fails with the 1-based line number; an empty
    file fails naming the file.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise FileFormatError(str(path), f"cannot read file: {exc.strerror}") from exc
    values: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        token = raw.strip()
        if lineno == 1 and token.lower() == "value":
            continue
        if not token:
            raise FileFormatError(str(path), "blank line in series file", lineno)
        try:
            value = float(token)
        except ValueError:
            raise FileFormatError(
                str(path), f"not a decimal number: {token!r}", lineno
            ) from None
        if not math.isfinite(value):
            raise FileFormatError(
                str(path), f"non-finite value not allowed: {token!r}", lineno
            )
        values.append(value)
    if not values:
        raise FileFormatError(str(path), "file contains no values")
    return np.asarray(values, dtype=np.float64)


def write_series_values(path, values) -> None:
    """Write one value per line in shortest round-trip decimal form."""
    lines = [repr(float(v)) for v in np.asarray(values, dtype=np.float64)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def format_dyad_display(frequency: float, coefficient: float) -> str:
    """Six-decimal display form of one dyad, e.g. '(0.250000; 170.500000)'."""
    return f"({frequency:.6f}; {coefficient:.6f})"


def write_spectrum(path, spectrum: Spectrum) -> None:
    """Serialize a spectrum as JSON with full-precision numbers."""
    freqs = spectrum.frequencies
    coeffs = spectrum.coefficients
    doc = {
        "n": spectrum.grid.n,
        "delta_t_s": spectrum.grid.delta_t,
        "f_s_hz": spectrum.grid.f_s,
        "unit": spectrum.unit,
        "dyads": [
            {
                "i": i + 1,
                "f_hz": float(freqs[i]),
                "c": float(coeffs[i]),
                "display": format_dyad_display(float(freqs[i]), float(coeffs[i])),
            }
            for i in range(spectrum.grid.n)
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _require(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise FileFormatError(path, message)


def read_spectrum(path) -> Spectrum:
    """Parse and validate a spectrum JSON file.

    Checks the record count, ascending 1..n indices, finite numbers, and
    that stored frequencies agree with the grid's frequency law; display
    strings are presentation-only and ignored.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise FileFormatError(str(path), f"cannot read file: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(str(path), f"not valid JSON: {exc}") from None
    p = str(path)
    _require(isinstance(doc, dict), p, "top level must be a JSON object")
    for key in ("n", "delta_t_s", "f_s_hz", "unit", "dyads"):
        _require(key in doc, p, f"missing required field {key!r}")
    n = doc["n"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 1,
             p, f"n must be a positive integer, got {n!r}")
    for key in ("delta_t_s", "f_s_hz"):
        v = doc[key]
        _require(isinstance(v, (int, float)) and not isinstance(v, bool)
                 and math.isfinite(v) and v > 0,
                 p, f"{key} must be a positive finite number, got {v!r}")
    _require(isinstance(doc["unit"], str), p, "unit must be a string")
    try:
        grid = GridSpec(n, float(doc["delta_t_s"]), float(doc["f_s_hz"]))
    except ValueError as exc:
        raise FileFormatError(p, str(exc)) from None
    records = doc["dyads"]
    _require(isinstance(records, list), p, "dyads must be an array")
    _require(len(records) == n, p, f"expected {n} dyad records, found {len(records)}")
    coefficients = np.empty(n, dtype=np.float64)
    spans = np.arange(n, 0, -1, dtype=np.float64)
    expected_freqs = grid.f_s / (2.0 * spans)
    for pos, rec in enumerate(records):
        _require(isinstance(rec, dict), p, f"dyad record {pos + 1} must be an object")
        for key in ("i", "f_hz", "c"):
            _require(key in rec, p, f"dyad record {pos + 1} missing field {key!r}")
        i = rec["i"]
        _require(isinstance(i, int) and not isinstance(i, bool) and i == pos + 1,
                 p, f"dyad indices must ascend 1..{n}; record {pos + 1} has i={i!r}")
        for key in ("f_hz", "c"):
            v = rec[key]
            _require(isinstance(v, (int, float)) and not isinstance(v, bool)
                     and math.isfinite(v),
                     p, f"dyad {i}: {key} must be a finite number, got {v!r}")
        f = float(rec["f_hz"])
        f_expected = float(expected_freqs[pos])
        _require(abs(f - f_expected) <= _FREQ_SANITY_REL_TOL * f_expected,
                 p, f"dyad {i}: frequency {f!r} does not match the grid "
                    f"(expected {f_expected!r})")
        coefficients[pos] = float(rec["c"])
    return Spectrum(grid, coefficients, doc["unit"])


def write_plotdata(path, spectrum: Spectrum) -> None:
    """Write a two-column CSV of (frequency, coefficient), one dyad per line."""
    freqs = spectrum.frequencies
    coeffs = spectrum.coefficients
    lines = [
        f"{repr(float(freqs[i]))},{repr(float(coeffs[i]))}"
        for i in range(spectrum.grid.n)
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_report(path, report: ReconstructionReport) -> None:
    """Serialize a reconstruction report as JSON."""
    doc = {
        "max_abs_error": report.max_abs_error,
        "index_of_max": report.index_of_max,
        "rms_error": report.rms_error,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
