"""
Report writing: JSON and CSV files written atomically, with provenance stamps.
"""

import csv
import datetime
import io
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Union

import numpy as np
import scipy
import sympy
from pydantic import BaseModel

logger = logging.getLogger(__name__)

PACKAGE_VERSION = "1.0.0"
CSV_DIGITS = 12
TIMESTAMP_FIELD = "generated_at"


def versions() -> Dict[str, str]:
    return {
        "phase_lab": PACKAGE_VERSION,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "sympy": sympy.__version__,
    }


def build_envelope(report: Union[BaseModel, Dict[str, Any]], config_echo: Optional[Dict[str, Any]] = None,
                   timestamp: Optional[str] = None) -> Dict[str, Any]:
    """Report payload plus `config`, `versions` and `generated_at`."""
    payload = report.model_dump() if isinstance(report, BaseModel) else dict(report)
    return {
        "report": payload,
        "config": config_echo or {},
        "versions": versions(),
        TIMESTAMP_FIELD: timestamp or datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def without_timestamp(payload: Dict[str, Any]) -> Dict[str, Any]:
    """Copy of an envelope without the field excluded from determinism checks."""
    return {key: value for key, value in payload.items() if key != TIMESTAMP_FIELD}


def _atomic_write(path: Path, text: str) -> Path:
    """Write through a temp file in the target directory, then os.replace."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except Exception:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise
    logger.info(f"Wrote {path}")
    return path


def write_json(path: Union[str, Path], payload: Dict[str, Any]) -> Path:
    return _atomic_write(Path(path), to_json(payload))


def format_cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.{CSV_DIGITS}g}"
    if isinstance(value, (list, tuple)):
        return "x".join(format_cell(v) for v in value)
    return str(value)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


def write_csv(path: Union[str, Path], header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    return _atomic_write(Path(path), to_csv(header, rows))


def ladder_rows(report) -> list:
    """Rows of "lambda,norm,method,resolution" for a DecayReport."""
    return [(lam, norm, report.estimator, resolution)
            for lam, norm, resolution in zip(report.lambdas, report.norms, report.resolutions)]


LADDER_HEADER = ("lambda", "norm", "method", "resolution")
