from polartrack.reports.base import ReportWriter
from polartrack.reports.manifest import RunManifest, load_metrics
from polartrack.reports.records import trace_record
from polartrack.reports.tables import (
    render_eval_table,
    render_improvement,
    render_metrics_table,
    render_statistics,
    render_trace_table,
)
from polartrack.reports.writers import (
    HashtagDumpWriter,
    MetricsWriter,
    PartitionWriter,
    ReportWriterFactory,
    TableWriter,
)

__all__ = [
    "HashtagDumpWriter",
    "MetricsWriter",
    "PartitionWriter",
    "ReportWriter",
    "ReportWriterFactory",
    "RunManifest",
    "TableWriter",
    "load_metrics",
    "render_eval_table",
    "render_improvement",
    "render_metrics_table",
    "render_statistics",
    "render_trace_table",
    "trace_record",
]
