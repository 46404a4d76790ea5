"""
Shared fixtures for the polar-tracker test suite
"""
import json
import logging

import pytest

from polartrack.core.config import ClassConfig
from polartrack.core.corpus import Corpus, TweetRecord, strip_golden
from polartrack.evaluation.golden import build_golden
from polartrack.synth.generator import SynthConfig, generate, synthetic_class_config
from polartrack.utils.logger import PROJECT_NAME


def records_from_rows(rows):
    """(tweet_id, user, day, hashtags) tuples to TweetRecords"""
    return [TweetRecord(tid, user, day, frozenset(tags)) for tid, user, day, tags in rows]


@pytest.fixture
def build_corpus():
    """Build a Corpus from (tweet_id, user, day, hashtags) rows."""
    def _build(rows):
        return Corpus(records_from_rows(rows))
    return _build


@pytest.fixture
def two_class_config():
    return ClassConfig(
        classes=("a", "b"),
        seed_hashtags={"a": ("a1",), "b": ("b1",)},
        golden_hashtags={"a": ("ga",), "b": ("gb",)},
    )


@pytest.fixture
def write_jsonl(tmp_path):
    """Write a list of dicts (or raw strings) as a line-delimited file."""
    def _write(lines, name="corpus.jsonl"):
        path = tmp_path / name
        with open(path, "w", encoding="utf-8") as f:
            for line in lines:
                f.write(line if isinstance(line, str) else json.dumps(line))
                f.write("\n")
        return str(path)
    return _write


@pytest.fixture
def config_file(tmp_path):
    """A two-class YAML configuration on disk."""
    path = tmp_path / "classes.yml"
    path.write_text(
        "classes: [a, b]\n"
        "seed:\n"
        "  a: a1\n"
        "  b: ['#B1']\n"
        "golden:\n"
        "  a: ga\n"
        "  b: gb\n"
        "alpha: 2\n"
        "beta: 1\n"
        "top_k: 50\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture(scope="session")
def synthetic_default():
    """The default synthetic corpus (seed 7) with its config, truth and golden set."""
    synth = SynthConfig()
    raw, truth = generate(synth)
    config = synthetic_class_config(synth)
    golden = build_golden(raw, config)
    return {
        "synth": synth,
        "raw": raw,
        "corpus": strip_golden(raw, config),
        "truth": truth,
        "config": config,
        "golden": golden,
    }


@pytest.fixture
def project_caplog(caplog):
    """caplog wired to the project logger, which does not propagate to root."""
    logger = logging.getLogger(PROJECT_NAME)
    logger.addHandler(caplog.handler)
    yield caplog
    logger.removeHandler(caplog.handler)
