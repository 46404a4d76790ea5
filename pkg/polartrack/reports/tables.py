"""
Human-readable tables. Numbers are rounded to 3 decimals here only.
"""

from typing import Any, Dict, List, Optional, Sequence

from polartrack.core.corpus import CorpusStatistics
from polartrack.core.driver import IterationTrace
from polartrack.evaluation.golden import GoldenSummary
from polartrack.evaluation.metrics import EvalReport
from polartrack.reports.records import trace_record


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _line(cells: Sequence[str], widths: Sequence[int]) -> str:
    # first column left-aligned, numbers right-aligned
    padded = [cells[0].ljust(widths[0])]
    padded += [cell.rjust(w) for cell, w in zip(cells[1:], widths[1:])]
    return "  ".join(padded).rstrip()


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [_line(header, widths), "  ".join("-" * w for w in widths)]
    lines.extend(_line(row, widths) for row in rows)
    return lines


def render_eval_table(report: EvalReport, title: Optional[str] = None) -> str:
    """Per-class P/R/F rows, the avg. row and a coverage footer"""
    rows = [
        [cls, _fmt(m.precision), _fmt(m.recall), _fmt(m.f_measure)]
        for cls, m in report.per_class.items()
    ]
    rows.append(
        ["avg.", _fmt(report.macro_precision), _fmt(report.macro_recall), _fmt(report.macro_f)]
    )
    lines = [title] if title else []
    lines.extend(_table(["class", "P", "R", "F"], rows))
    lines.append(
        f"gamma = {_fmt(report.gamma)}   Gamma = {_fmt(report.big_gamma)}   "
        f"|Z| = {report.golden_size}"
    )
    return "\n".join(lines) + "\n"


def render_metrics_table(records: Sequence[Dict[str, Any]]) -> str:
    """
    One row per iteration (or day) with class sizes and, when evaluated,
    metrics. Takes the records stored in metrics.jsonl.
    """
    if not records:
        return "no iterations\n"
    classes = list(records[0]["users"])
    temporal = records[0].get("day") is not None
    evaluated = records[0].get("eval") is not None

    header = ["day" if temporal else "iter"]
    header += [f"|U {cls}|" for cls in classes]
    header += [f"|H {cls}|" for cls in classes]
    header.append("new")
    if evaluated:
        header += ["macro-F", "gamma", "Gamma"]

    rows = []
    for record in records:
        row = [str(record["day"] if temporal else record["iteration"])]
        row += [str(record["users"][cls]) for cls in classes]
        row += [str(record["hashtags"].get(cls, 0)) for cls in classes]
        row.append(str(sum(len(hs) for hs in record["new_hashtags"].values())))
        if evaluated:
            metrics = record["eval"]
            row += [_fmt(metrics["macro_f"]), _fmt(metrics["gamma"]), _fmt(metrics["big_gamma"])]
        rows.append(row)

    lines = _table(header, rows)
    last = records[-1]
    if last.get("eval") is not None:
        label = f"day {last['day']}" if temporal else f"iteration {last['iteration']}"
        lines.append("")
        table = render_eval_table(EvalReport.from_dict(last["eval"]), title=f"Final ({label})")
        lines.append(table.rstrip("\n"))
    return "\n".join(lines) + "\n"


def render_trace_table(traces: Sequence[IterationTrace]) -> str:
    return render_metrics_table([trace_record(trace) for trace in traces])


def render_statistics(stats: CorpusStatistics, summary: Optional[GoldenSummary] = None) -> str:
    """The data statistics table and, when given, the golden dataset table"""
    rows = [
        ["tweets", str(stats.tweets)],
        ["users", str(stats.users)],
        [
            "users with hashtags",
            f"{stats.users_with_hashtags} ({stats.hashtag_user_fraction:.0%})",
        ],
        ["distinct hashtags", str(stats.distinct_hashtags)],
        ["days", str(stats.days)],
    ]
    lines = _table(["statistic", "value"], rows)
    if summary is not None:
        golden_rows = [
            [cls, str(summary.tweets[cls]), str(summary.users[cls])] for cls in summary.classes
        ]
        golden_rows.append(["total", str(summary.total_tweets), str(summary.total_users)])
        lines.append("")
        lines.extend(_table(["golden", "tweets", "users"], golden_rows))
    return "\n".join(lines) + "\n"


def render_improvement(name: str, report: EvalReport, baseline: EvalReport, change: Optional[float]) -> str:
    change_text = "n/a" if change is None else f"{change:+.0%}"
    return (
        f"{name}: macro-F {_fmt(report.macro_f)} vs baseline {_fmt(baseline.macro_f)} "
        f"({change_text})\n"
    )
