"""
Base report writer for run output directories
"""

import json
import os
from abc import ABC, abstractmethod
from typing import Any, List, Sequence

from polartrack.core.driver import IterationTrace


class ReportWriter(ABC):
    """Abstract base class for files written into a run directory"""

    # Constants for terminal output
    GREEN = "\033[92m"
    RED = "\033[91m"
    RESET = "\033[0m"
    PASS_SYMBOL = "✓"  # Checkmark
    FAIL_SYMBOL = "✗"  # X mark

    filename = ""

    def __init__(self, output_dir: str):
        self.output_dir = output_dir

    @property
    def path(self) -> str:
        return os.path.join(self.output_dir, self.filename)

    @abstractmethod
    def render(self, traces: Sequence[IterationTrace]) -> str:
        """
        Render the file content for a run

        Args:
            traces: Iteration or day traces of the run, in order

        Returns:
            str: The complete file content
        """

    def write(self, traces: Sequence[IterationTrace]) -> str:
        """Render and write the file; returns its path"""
        os.makedirs(self.output_dir, exist_ok=True)
        with open(self.path, "w", encoding="utf-8") as f:
            f.write(self.render(traces))
        return self.path

    @staticmethod
    def json_line(record: Any) -> str:
        return json.dumps(record, ensure_ascii=False, separators=(",", ":")) + "\n"

    @staticmethod
    def json_lines(records: List[Any]) -> str:
        return "".join(ReportWriter.json_line(record) for record in records)

    @classmethod
    def format_status_line(cls, passed: bool, text: str) -> str:
        """
        Format a status line with color and symbol

        Args:
            passed: Whether the status is good
            text: The text to display after the symbol

        Returns:
            str: Formatted line
        """
        color = cls.GREEN if passed else cls.RED
        symbol = cls.PASS_SYMBOL if passed else cls.FAIL_SYMBOL
        return f"{color}{symbol}{cls.RESET} {text}"
