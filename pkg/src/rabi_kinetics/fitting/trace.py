"""
Reading, writing and synthesizing Rabi-flopping traces.

Trace files are comma-separated with columns `t_seconds,p2[,sigma]`. Lines
starting with `#` are comments and a header row is optional.
"""

from __future__ import annotations

import io
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from ..exceptions.base import ValidationError
from ..exceptions.numerics import TraceFormatError
from ..types.config import ConfigLike
from ..types.fitting import FlopTrace

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("t_seconds", "p2", "sigma")


def load_trace(path: str | Path, format: str = "csv") -> FlopTrace:
    """
    Load and validate a trace file.

    Args:
        path: File to read
        format: Only "csv" is understood

    Returns:
        FlopTrace with rows sorted by time

    Raises:
        TraceFormatError: If a row is malformed; the 1-based line number is reported
        ValidationError: If the rows violate the trace invariants
    """
    if format != "csv":
        raise ValidationError(f"Unsupported trace format '{format}'. Available: csv")

    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()

    rows: list[tuple[int, str]] = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            rows.append((number, stripped))

    if rows and _is_header(rows[0][1]):
        rows = rows[1:]

    if not rows:
        raise ValidationError(f"Trace file {path} holds no data rows", error_code="EMPTY_TRACE")

    width = len(rows[0][1].split(","))
    if width not in (2, 3):
        raise TraceFormatError(rows[0][0], rows[0][1], message=f"Expected 2 or 3 columns, got {width}")
    for number, line in rows:
        if len(line.split(",")) != width:
            raise TraceFormatError(number, line, message=f"Line {number}: expected {width} columns")

    frame = pd.read_csv(
        io.StringIO("\n".join(line for _, line in rows)),
        header=None,
        names=list(TRACE_COLUMNS[:width]),
        dtype=str,
        skipinitialspace=True,
    )
    # float() rounds correctly, so %.17g output reads back bit for bit
    numeric = frame.map(_parse_cell)

    bad = numeric.isna().any(axis=1).to_numpy()
    if bad.any():
        index = int(np.argmax(bad))
        number, line = rows[index]
        raise TraceFormatError(number, line)

    logger.debug("Loaded %d trace rows from %s", len(numeric), path)
    return FlopTrace.from_rows(
        numeric["t_seconds"].to_numpy(),
        numeric["p2"].to_numpy(),
        numeric["sigma"].to_numpy() if width == 3 else None,
        source=str(path),
    )


def _parse_cell(cell: str) -> float:
    try:
        return float(cell)
    except (TypeError, ValueError):
        return np.nan


def _is_header(line: str) -> bool:
    # a typo in one cell of the first row is a malformed row, not a header
    return all(np.isnan(_parse_cell(cell.strip())) for cell in line.split(","))


def save_trace(trace: FlopTrace, path: str | Path | None = None) -> str:
    """
    Write a trace as CSV with 17 significant digits, so loading it back is exact.

    Returns:
        The CSV text
    """
    columns = {"t_seconds": trace.t, "p2": trace.p}
    if trace.sigma is not None:
        columns["sigma"] = trace.sigma

    buffer = io.StringIO()
    buffer.write(f"# source: {trace.source}\n")
    pd.DataFrame(columns).to_csv(buffer, index=False, float_format="%.17g", lineterminator="\n")
    text = buffer.getvalue()

    if path is not None:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    return text


def synthetic_trace(
    model,
    A_true: float,
    points: int = 60,
    t_max: float = 90e-6,
    noise: float = 0.02,
    seed: int = 0,
    scale: float = 1.0,
    offset: float = 0.0,
    config: ConfigLike = None,
) -> FlopTrace:
    """
    Seeded cavity trace on (0, t_max] with Gaussian noise.

    Args:
        model: CavityFitModel giving the probability curve for a decay rate
        A_true: Decay rate the data are generated with (1/s)
        points: Number of equally spaced samples
        t_max: Last sample time (s)
        noise: Standard deviation of the added noise; 0 gives exact data
        seed: Seed for numpy's default generator
        scale: Amplitude applied to the model curve
        offset: Constant added to the model curve
        config: Solver configuration for the cavity quadrature

    Returns:
        FlopTrace whose sigma column is the noise level (absent for exact data)
    """
    if points < 2:
        raise ValidationError(f"A synthetic trace needs at least 2 points, got {points}")

    rng = np.random.default_rng(seed)
    t = np.linspace(t_max / points, t_max, points)
    p = scale * model.probability(t, A_true, config=config) + offset
    if noise > 0:
        p = p + rng.normal(0.0, noise, size=points)

    return FlopTrace(
        t=t,
        p=np.clip(p, 0.0, 1.0),
        sigma=np.full(points, noise) if noise > 0 else None,
        source=f"synthetic A={A_true:g} noise={noise:g} seed={seed}",
    )
