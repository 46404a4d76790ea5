from polartrack.core.classify import dominant_class, polarized_tweets, users_class
from polartrack.core.config import ClassConfig, dump_class_config, load_class_config
from polartrack.core.corpus import (
    Corpus,
    CorpusStatistics,
    TweetRecord,
    corpus_statistics,
    load_corpus,
    normalize_hashtag,
    strip_golden,
    top_hashtags,
    write_corpus,
)
from polartrack.core.driver import IterationTrace, run_ptr, run_tptr
from polartrack.core.errors import (
    ConfigValidationError,
    CorpusFormatError,
    DuplicateTweetError,
    FeatureSpaceError,
    PolarTrackError,
    UnknownUserError,
)
from polartrack.core.partition import ClassPartition, HashtagPartition, UserPartition
from polartrack.core.topics import (
    HashtagScore,
    assign_hashtags,
    candidate_sets,
    candidate_tweet_sets,
    hashtags_class,
    score,
    score_candidates,
    score_table,
)
