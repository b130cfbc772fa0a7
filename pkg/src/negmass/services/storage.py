import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from ..core.config import get_settings

logger = logging.getLogger(__name__)


class ArtifactStorage:
  """Owns one output directory: CSV tables and JSON documents written into it."""

  def __init__(self, output_dir: Optional[Path] = None, float_format: Optional[str] = None):
    settings = get_settings()
    self.output_dir = Path(output_dir or settings.OUTPUT_DIR)
    self.float_format = float_format or settings.CSV_FLOAT_FORMAT
    self.written: List[str] = []
    self.stats = {
      "csv_files": 0,
      "json_files": 0,
      "rows": 0,
    }

  def _path(self, name: str) -> Path:
    self.output_dir.mkdir(parents=True, exist_ok=True)
    return self.output_dir / name

  def write_csv(self, name: str, frame: pd.DataFrame) -> Path:
    path = self._path(name)
    frame = split_complex_columns(frame)
    try:
      frame.to_csv(path, index=False, float_format=self.float_format, lineterminator="\n")
    except OSError as e:
      logger.error(f"Failed to write {path}: {e}")
      raise
    self._record(name)
    self.stats["csv_files"] += 1
    self.stats["rows"] += len(frame)
    logger.info(f"📄 Wrote {len(frame)} rows to {path}")
    return path

  def write_json(self, name: str, payload: Dict[str, Any]) -> Path:
    path = self._path(name)
    path.write_text(dumps(payload), encoding="utf-8")
    self._record(name)
    self.stats["json_files"] += 1
    logger.info(f"🧾 Wrote {path}")
    return path

  def _record(self, name: str) -> None:
    if name not in self.written:
      self.written.append(name)

  def artifacts(self) -> List[str]:
    return sorted(self.written)

  def get_stats(self) -> Dict[str, Any]:
    return {**self.stats, "files": len(self.written), "output_dir": str(self.output_dir)}


def dumps(payload: Dict[str, Any]) -> str:
  """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
  return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=True) + "\n"


def split_complex_columns(frame: pd.DataFrame) -> pd.DataFrame:
  """Replace every complex column `c` by `c_re` and `c_im`."""
  columns = {}
  for name in frame.columns:
    series = frame[name]
    if pd.api.types.is_complex_dtype(series):
      columns[f"{name}_re"] = series.to_numpy().real
      columns[f"{name}_im"] = series.to_numpy().imag
    else:
      columns[name] = series
  return pd.DataFrame(columns)
