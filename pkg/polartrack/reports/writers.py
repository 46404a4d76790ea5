"""
Run directory writers and their factory
"""

import json
from typing import Any, Dict, List, Sequence

from polartrack.core.driver import IterationTrace
from polartrack.core.topics import score_table
from polartrack.reports.base import ReportWriter
from polartrack.reports.records import trace_record
from polartrack.reports.tables import render_trace_table


class MetricsWriter(ReportWriter):
    """metrics.jsonl: one record per iteration or day"""

    filename = "metrics.jsonl"

    def render(self, traces: Sequence[IterationTrace]) -> str:
        return self.json_lines([trace_record(trace) for trace in traces])


class HashtagDumpWriter(ReportWriter):
    """hashtags.jsonl: ranked per-class scores of every scored hashtag"""

    filename = "hashtags.jsonl"

    def render(self, traces: Sequence[IterationTrace]) -> str:
        records: List[Dict[str, Any]] = []
        for trace in traces:
            for row in score_table(trace.scores, trace.users.classes):
                records.append(
                    {
                        "iteration": trace.iteration,
                        "day": trace.day,
                        "hashtag": row.hashtag,
                        "class": row.cls,
                        "score": row.score,
                        "assigned": trace.hashtags.owner(row.hashtag) == row.cls,
                    }
                )
        return self.json_lines(records)


class PartitionWriter(ReportWriter):
    """partitions.json: final user and hashtag partitions"""

    filename = "partitions.json"

    def render(self, traces: Sequence[IterationTrace]) -> str:
        if not traces:
            return json.dumps({"users": {}, "hashtags": {}}) + "\n"
        last = traces[-1]
        data = {"users": last.users.to_dict(), "hashtags": last.hashtags.to_dict()}
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


class TableWriter(ReportWriter):
    """report.txt: the human-readable trace table"""

    filename = "report.txt"

    def render(self, traces: Sequence[IterationTrace]) -> str:
        return render_trace_table(traces)


class ReportWriterFactory:
    """Factory for creating the writers of a run directory"""

    @staticmethod
    def create_writers(output_dir: str, scores: bool = True) -> List[ReportWriter]:
        """
        Create the writers for a run directory

        Args:
            output_dir: The run directory
            scores: Whether to include the hashtag score dump

        Returns:
            list: Writer instances, in writing order
        """
        writers: List[ReportWriter] = [MetricsWriter(output_dir)]
        if scores:
            writers.append(HashtagDumpWriter(output_dir))
        writers.append(PartitionWriter(output_dir))
        writers.append(TableWriter(output_dir))
        return writers
