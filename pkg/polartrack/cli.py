"""
polar-tracker CLI
================================
Command-line front end: generate a synthetic corpus, run PTR or TPTR, run the
seeded k-means baseline, evaluate stored partitions and re-render run
directories.

Every command that writes results writes a run directory holding
manifest.json, metrics.jsonl, partitions.json and report.txt (plus
hashtags.jsonl for PTR and TPTR runs). Input files are never modified.
"""

import json
import logging
import os
import sys
from contextlib import contextmanager
from typing import Any, Callable, Dict, List, Optional

import click

from polartrack import __version__
from polartrack.baseline.kmeans import run_baseline
from polartrack.core.config import ClassConfig, load_class_config
from polartrack.core.corpus import corpus_statistics, load_corpus, strip_golden
from polartrack.core.driver import IterationTrace, run_ptr, run_tptr
from polartrack.core.errors import (
    ConfigValidationError,
    CorpusFormatError,
    FeatureSpaceError,
)
from polartrack.core.partition import HashtagPartition, UserPartition
from polartrack.evaluation.golden import build_golden, golden_summary
from polartrack.evaluation.metrics import EvalReport, evaluate, improvement
from polartrack.reports.base import ReportWriter
from polartrack.reports.manifest import RunManifest, load_metrics
from polartrack.reports.tables import (
    render_eval_table,
    render_improvement,
    render_metrics_table,
    render_statistics,
    render_trace_table,
)
from polartrack.reports.writers import ReportWriterFactory
from polartrack.synth.generator import (
    SynthConfig,
    generate,
    synthetic_class_config,
    write_synthetic,
)
from polartrack.utils.logger import get_logger, set_log_level
from polartrack.utils.parallel import THREADS_ENV_VAR

logger = get_logger(__name__)

EXIT_ERROR = 1
EXIT_FILE_NOT_FOUND = 3
EXIT_CORPUS_FORMAT = 4
EXIT_CONFIG = 5
EXIT_FEATURE_SPACE = 6
EXIT_ABORTED = 130


@contextmanager
def _exit_on_error():
    """Turn package errors into a one-line diagnostic and a distinct exit code"""
    try:
        yield
    except click.ClickException:
        raise
    except click.Abort:
        logger.info("Operation aborted by user")
        click.echo("Operation aborted by user", err=True)
        sys.exit(EXIT_ABORTED)
    except FileNotFoundError as e:
        logger.error("File not found: %s", e)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_FILE_NOT_FOUND)
    except CorpusFormatError as e:
        logger.error("Corpus format error: %s", e)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_CORPUS_FORMAT)
    except ConfigValidationError as e:
        logger.error("Configuration error: %s", e)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_CONFIG)
    except FeatureSpaceError as e:
        logger.error("Feature space error: %s", e)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_FEATURE_SPACE)
    except Exception as e:
        logger.exception("Error during execution: %s", e)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_ERROR)


def _config_option(func: Callable) -> Callable:
    return click.option(
        "--config",
        "-c",
        "config_path",
        required=True,
        type=click.Path(dir_okay=False),
        help="Path to the YAML class configuration",
    )(func)


def _run_options(func: Callable) -> Callable:
    """Options shared by run and tptr"""
    options = [
        click.argument("corpus_path", type=click.Path(dir_okay=False)),
        _config_option,
        click.option("--alpha", type=float, help="Override the user dominance factor"),
        click.option("--beta", type=float, help="Override the hashtag dominance factor"),
        click.option("--top-k", type=int, help="Override the per-class candidate cap"),
        click.option(
            "--max-iter", "max_iterations", type=int, help="Override max_iterations"
        ),
        click.option(
            "--threads",
            type=click.IntRange(min=1),
            envvar=THREADS_ENV_VAR,
            help=f"Worker threads for classification (default: ${THREADS_ENV_VAR} or 1)",
        ),
        click.option(
            "--golden", is_flag=True, help="Evaluate every step against the golden set"
        ),
        click.option(
            "--output-dir",
            "-o",
            required=True,
            type=click.Path(file_okay=False),
            help="Run directory to write",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _prepare(corpus_path: str, config: ClassConfig, golden: bool):
    """Load the corpus, build Z when asked, then strip the golden hashtags"""
    raw = load_corpus(corpus_path, config)
    golden_set = build_golden(raw, config) if golden else None
    return strip_golden(raw, config), golden_set


def _write_run(
    subcommand: str,
    traces: List[IterationTrace],
    corpus_path: str,
    config_path: str,
    output_dir: str,
    overrides: Dict[str, Any],
    parameters: Dict[str, Any],
    scores: bool = True,
) -> None:
    for writer in ReportWriterFactory.create_writers(output_dir, scores=scores):
        path = writer.write(traces)
        logger.debug("Wrote %s", path)
    RunManifest(
        subcommand=subcommand,
        input_path=corpus_path,
        config_path=config_path,
        output_dir=output_dir,
        overrides={k: v for k, v in overrides.items() if v is not None},
        parameters=parameters,
        version=__version__,
    ).write()


def _run_algorithm(subcommand: str, runner: Callable, **kwargs) -> List[IterationTrace]:
    overrides = {
        "alpha": kwargs["alpha"],
        "beta": kwargs["beta"],
        "top_k": kwargs["top_k"],
        "max_iterations": kwargs["max_iterations"],
    }
    config = load_class_config(kwargs["config_path"]).with_overrides(**overrides)
    corpus, golden_set = _prepare(kwargs["corpus_path"], config, kwargs["golden"])
    traces = runner(corpus, config, golden=golden_set, threads=kwargs["threads"])
    _write_run(
        subcommand,
        traces,
        kwargs["corpus_path"],
        kwargs["config_path"],
        kwargs["output_dir"],
        overrides,
        config.to_dict(),
    )
    click.echo(render_trace_table(traces), nl=False)
    return traces


@click.group()
@click.version_option(__version__, prog_name="polar-tracker")
@click.option(
    "--verbose", "-v", count=True, help="Increase verbosity (DEBUG logging)"
)
def cli(verbose: int = 0):
    """Track polarized user communities and their hashtags in a tweet stream."""
    if verbose:
        set_log_level(logging.DEBUG)


@cli.command()
@click.option("--seed", type=click.IntRange(min=0), default=7, show_default=True)
@click.option("--classes", type=int, help="Number of classes")
@click.option("--users-per-class", type=int, help="Polarized users per class")
@click.option("--neutral-users", type=int, help="Users with no class")
@click.option("--days", type=int, help="Number of days")
@click.option("--leak-prob", type=float, help="Per-tweet rival hashtag leak probability")
@click.option("--golden-frac", type=float, help="Share of class users emitting the golden hashtag")
@click.option(
    "--output",
    "-o",
    required=True,
    type=click.Path(dir_okay=False),
    help="Corpus file to write; the config and truth files go next to it",
)
def gen(seed: int, output: str, **knobs):
    """Generate a planted-polarization corpus with its config and ground truth."""
    with _exit_on_error():
        synth = SynthConfig(seed=seed, **{k: v for k, v in knobs.items() if v is not None})
        corpus, truth = generate(synth)
        paths = write_synthetic(corpus, truth, synthetic_class_config(synth), output)
        for label, path in zip(("corpus", "config", "truth"), paths):
            click.echo(f"{label}: {path}")


@cli.command()
@_run_options
def run(**kwargs):
    """Run batch PTR until the partitions stop changing."""
    with _exit_on_error():
        traces = _run_algorithm("run", run_ptr, **kwargs)
        if traces and traces[-1].converged:
            status = ReportWriter.format_status_line(
                True, f"Converged after {len(traces)} iteration(s)"
            )
        else:
            status = ReportWriter.format_status_line(
                False, f"No convergence within {len(traces)} iteration(s)"
            )
        click.echo(status)


@cli.command()
@_run_options
def tptr(**kwargs):
    """Run temporal TPTR, one iteration per day."""
    with _exit_on_error():
        traces = _run_algorithm("tptr", run_tptr, **kwargs)
        click.echo(
            ReportWriter.format_status_line(True, f"Processed {len(traces)} day(s)")
        )


@cli.command()
@click.argument("corpus_path", type=click.Path(dir_okay=False))
@_config_option
@click.option("--top-k", type=int, help="Override baseline_top_k (vector dimensions)")
@click.option("--golden", is_flag=True, help="Evaluate against the golden set")
@click.option(
    "--output-dir", "-o", required=True, type=click.Path(file_okay=False)
)
def baseline(
    corpus_path: str,
    config_path: str,
    top_k: Optional[int],
    golden: bool,
    output_dir: str,
):
    """Cluster users with the seeded k-means baseline."""
    with _exit_on_error():
        overrides = {"baseline_top_k": top_k}
        config = load_class_config(config_path).with_overrides(**overrides)
        corpus, golden_set = _prepare(corpus_path, config, golden)
        result = run_baseline(corpus, config)
        report = (
            evaluate(result.partition, golden_set, len(corpus.users))
            if golden_set is not None
            else None
        )
        trace = IterationTrace(
            iteration=1,
            hashtags=HashtagPartition.empty(config.classes),
            users=result.partition,
            eval=report,
            converged=result.converged,
        )
        parameters = config.to_dict()
        parameters["kmeans"] = {
            "rounds": result.rounds,
            "converged": result.converged,
            "wcss": list(result.wcss),
        }
        _write_run(
            "baseline",
            [trace],
            corpus_path,
            config_path,
            output_dir,
            overrides,
            parameters,
            scores=False,
        )
        if report is not None:
            click.echo(render_eval_table(report, title="k-means baseline"), nl=False)
        else:
            click.echo(f"Cluster sizes: {result.partition.sizes()}")
        click.echo(
            ReportWriter.format_status_line(
                result.converged, f"k-means stopped after {result.rounds} round(s)"
            )
        )


def _load_partition(path: str, config: ClassConfig) -> UserPartition:
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Partition file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    return UserPartition.from_dict(data.get("users", {}), classes=config.classes)


@cli.command(name="eval")
@click.argument("corpus_path", type=click.Path(dir_okay=False))
@_config_option
@click.option(
    "--partition",
    "partition_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="partitions.json of a run",
)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")
def evaluate_command(corpus_path: str, config_path: str, partition_path: str, as_json: bool):
    """Evaluate a stored user partition against the golden set."""
    with _exit_on_error():
        config = load_class_config(config_path)
        raw = load_corpus(corpus_path, config)
        golden_set = build_golden(raw, config)
        users = _load_partition(partition_path, config)
        report = evaluate(users, golden_set, len(raw.users))
        if as_json:
            click.echo(json.dumps(report.to_dict(), indent=2))
        else:
            click.echo(render_eval_table(report), nl=False)


def _final_eval(records: List[Dict[str, Any]], run_dir: str) -> Optional[EvalReport]:
    if not records or records[-1].get("eval") is None:
        logger.warning("Run %s has no evaluation", run_dir)
        return None
    return EvalReport.from_dict(records[-1]["eval"])


@cli.command()
@click.argument("run_dirs", nargs=-1, required=True, type=click.Path(file_okay=False))
@click.option(
    "--baseline",
    "baseline_dir",
    type=click.Path(file_okay=False),
    help="Baseline run directory to compare macro-F against",
)
def report(run_dirs: List[str], baseline_dir: Optional[str]):
    """Re-render the metrics of stored run directories."""
    with _exit_on_error():
        reference = None
        if baseline_dir is not None:
            reference = _final_eval(load_metrics(baseline_dir), baseline_dir)
            if reference is None:
                raise click.UsageError(f"Baseline run {baseline_dir} was not evaluated")

        for run_dir in run_dirs:
            records = load_metrics(run_dir)
            click.echo(f"== {run_dir} ==")
            click.echo(render_metrics_table(records), nl=False)
            if reference is not None:
                final = _final_eval(records, run_dir)
                if final is not None:
                    click.echo(
                        render_improvement(
                            run_dir, final, reference, improvement(final, reference)
                        ),
                        nl=False,
                    )


@cli.command()
@click.argument("corpus_path", type=click.Path(dir_okay=False))
@_config_option
def stats(corpus_path: str, config_path: str):
    """Print corpus statistics and the golden dataset summary."""
    with _exit_on_error():
        config = load_class_config(config_path)
        raw = load_corpus(corpus_path, config)
        golden_set = build_golden(raw, config)
        click.echo(
            render_statistics(corpus_statistics(raw), golden_summary(raw, golden_set, config)),
            nl=False,
        )


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting"""
    try:
        cli.main(args=argv, prog_name="polar-tracker", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        click.echo("Operation aborted by user", err=True)
        return EXIT_ABORTED
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
