from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd

from leadlag.core.errors import InputDataError
from leadlag.core.tables import write_table
from leadlag.series_prep.csv_io import export_spliced
from leadlag.series_prep.types import PriceSeries

logger = logging.getLogger(__name__)


class OutputWriter:
    """
    Writes a run's files under one directory and remembers them, so a failed
    run can remove what it already wrote.

        with OutputWriter(out_dir, header) as out:
            out.table("returns.csv", frame)
    """

    def __init__(self, out_dir: Path, config: Dict[str, Any]):
        self.out_dir = Path(out_dir)
        self.config = config
        self.written: List[Path] = []

    def __enter__(self) -> "OutputWriter":
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise InputDataError(f"output directory not writable: {self.out_dir} ({e})") from e
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None:
            self.rollback()
        return False

    def table(self, name: str, frame: pd.DataFrame) -> Path:
        return self._track(write_table(frame, self.out_dir / name, config=self.config))

    def spliced(self, name: str, series: PriceSeries) -> Path:
        return self._track(export_spliced(series, self.out_dir / name, config=self.config))

    def json(self, name: str, payload: Dict[str, Any]) -> Path:
        path = self.out_dir / name
        body = {"config": self.config, **payload}
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            json.dump(body, fh, indent=2, sort_keys=False, default=str)
            fh.write("\n")
        return self._track(path)

    def rollback(self) -> None:
        for path in reversed(self.written):
            path.unlink(missing_ok=True)
        subdirs = {p.parent for p in self.written if p.parent != self.out_dir}
        for directory in sorted(subdirs, key=lambda p: len(p.parts), reverse=True):
            if directory.is_dir() and not any(directory.iterdir()):
                directory.rmdir()
        if self.written:
            logger.warning("removed %d partial output file(s) from %s", len(self.written), self.out_dir)
        self.written.clear()

    def _track(self, path: Path) -> Path:
        self.written.append(path)
        logger.debug("wrote %s", path)
        return path
