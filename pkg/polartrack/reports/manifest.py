"""
Run manifest and metrics reader
"""

import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from polartrack.utils.logger import get_logger

logger = get_logger(__name__)

MANIFEST_FILE = "manifest.json"
METRICS_FILE = "metrics.jsonl"


@dataclass(frozen=True)
class RunManifest:
    """Inputs and parameters of a run, written verbatim into its directory"""

    subcommand: str
    input_path: str
    config_path: Optional[str]
    output_dir: str
    overrides: Dict[str, Any] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)
    timestamp: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds")
    )
    version: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def write(self) -> str:
        os.makedirs(self.output_dir, exist_ok=True)
        path = os.path.join(self.output_dir, MANIFEST_FILE)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")
        return path

    @classmethod
    def load(cls, run_dir: str) -> "RunManifest":
        path = os.path.join(run_dir, MANIFEST_FILE)
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Run manifest not found: {path}")
        with open(path, "r", encoding="utf-8") as f:
            return cls(**json.load(f))


def load_metrics(run_dir: str) -> List[Dict[str, Any]]:
    """
    Read metrics.jsonl of a run directory.

    Raises:
        FileNotFoundError: If the run directory has no metrics file
    """
    path = os.path.join(run_dir, METRICS_FILE)
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Metrics file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        records = [json.loads(line) for line in f if line.strip()]
    logger.debug("Loaded %d metric records from %s", len(records), path)
    return records
