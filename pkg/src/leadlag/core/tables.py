from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Optional

import pandas as pd

FLOAT_FORMAT = "%.10g"


def config_header(config: Optional[Dict[str, Any]]) -> str:
    """Single comment line declaring the configuration that produced a file."""
    payload = json.dumps(config or {}, sort_keys=True, default=str, separators=(",", ":"))
    return f"# config: {payload}\n"


def write_table(frame: pd.DataFrame, path: str | Path, *, config: Optional[Dict[str, Any]] = None) -> Path:
    """
    Write `frame` as CSV preceded by the config comment line.
    Output is byte-stable for identical inputs (fixed float format, LF endings).
    """
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", encoding="utf-8", newline="") as fh:
        fh.write(config_header(config))
        frame.to_csv(fh, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return p


def read_table(path: str | Path) -> pd.DataFrame:
    """Read a file written by write_table (the config line is skipped)."""
    return pd.read_csv(path, skiprows=1)
