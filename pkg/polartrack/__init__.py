"""
polar-tracker: polarized user communities and their hashtags in a tweet stream
"""

__version__ = "0.1.0"

from polartrack.core import (
    ClassConfig,
    Corpus,
    HashtagPartition,
    IterationTrace,
    TweetRecord,
    UserPartition,
    hashtags_class,
    load_class_config,
    load_corpus,
    run_ptr,
    run_tptr,
    strip_golden,
    users_class,
)
from polartrack.evaluation import EvalReport, GoldenSet, build_golden, evaluate

__all__ = [
    "ClassConfig",
    "Corpus",
    "EvalReport",
    "GoldenSet",
    "HashtagPartition",
    "IterationTrace",
    "TweetRecord",
    "UserPartition",
    "build_golden",
    "evaluate",
    "hashtags_class",
    "load_class_config",
    "load_corpus",
    "run_ptr",
    "run_tptr",
    "strip_golden",
    "users_class",
]
