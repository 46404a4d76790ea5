"""
Planted-polarization corpus generator.

Every random draw comes from a numpy Generator keyed by (seed, stream, user,
day), so the output does not depend on generation order.

Class users draw hashtags from their class vocabulary (Zipf-weighted, the
seed hashtag first) or from a flat shared vocabulary, in proportion to a
per-user partisanship level. Non-empty tweets occasionally leak a rival
class hashtag or name a rival's seed next to the user's own seed. Neutral
users tweet shared hashtags and now and then a seed. A fixed share of each
class emits the class golden hashtag.
"""

import json
import os
import string
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Set, Tuple

import numpy as np

from polartrack.core.config import ClassConfig, dump_class_config
from polartrack.core.corpus import Corpus, TweetRecord, write_corpus
from polartrack.core.errors import ConfigValidationError
from polartrack.core.partition import UserPartition
from polartrack.utils.logger import get_logger

logger = get_logger(__name__)

_PROFILE_STREAM = 1
_TWEET_STREAM = 2
_GOLDEN_STREAM = 3


@dataclass(frozen=True)
class SynthConfig:
    seed: int = 7
    classes: int = 3
    users_per_class: int = 300
    neutral_users: int = 400
    days: int = 9
    tweets_per_user_per_day: float = 0.8
    class_vocab_size: int = 30
    shared_vocab_size: int = 200
    leak_prob: float = 0.05
    golden_frac: float = 0.1
    hashtags_per_tweet: float = 0.6
    empty_tweet_prob: float = 0.35
    rival_mention_prob: float = 0.1
    neutral_seed_prob: float = 0.1
    zipf_exponent: float = 0.5
    activity_shape: float = 1.0
    partisanship_min: float = 0.2
    candidate_top_k: Optional[int] = None

    def __post_init__(self):
        problems: List[str] = []
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            problems.append(f"seed must be a non-negative integer, got {self.seed!r}")
        for name in ("classes", "users_per_class", "days", "class_vocab_size", "shared_vocab_size"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                problems.append(f"{name} must be a positive integer, got {value!r}")
        if isinstance(self.classes, int) and self.classes < 2:
            problems.append("classes must be at least 2")
        if isinstance(self.class_vocab_size, int) and self.class_vocab_size < 2:
            problems.append("class_vocab_size must be at least 2")
        if (
            isinstance(self.neutral_users, bool)
            or not isinstance(self.neutral_users, int)
            or self.neutral_users < 0
        ):
            problems.append(f"neutral_users must be >= 0, got {self.neutral_users!r}")
        for name in (
            "leak_prob",
            "golden_frac",
            "empty_tweet_prob",
            "rival_mention_prob",
            "neutral_seed_prob",
            "partisanship_min",
        ):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                problems.append(f"{name} must be in [0, 1], got {value!r}")
        for name in ("tweets_per_user_per_day", "hashtags_per_tweet"):
            if getattr(self, name) < 0:
                problems.append(f"{name} must be >= 0, got {getattr(self, name)!r}")
        for name in ("zipf_exponent", "activity_shape"):
            if getattr(self, name) <= 0:
                problems.append(f"{name} must be > 0, got {getattr(self, name)!r}")
        if self.candidate_top_k is not None and (
            not isinstance(self.candidate_top_k, int) or self.candidate_top_k < 1
        ):
            problems.append(
                f"candidate_top_k must be a positive integer, got {self.candidate_top_k!r}"
            )
        if problems:
            raise ConfigValidationError(problems)

    @property
    def effective_top_k(self) -> int:
        """Candidate cap: one class vocabulary plus the rival seeds"""
        if self.candidate_top_k is not None:
            return self.candidate_top_k
        return self.class_vocab_size + self.classes - 1

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def class_names(count: int) -> List[str]:
    if count <= len(string.ascii_lowercase):
        return [f"party_{letter}" for letter in string.ascii_lowercase[:count]]
    return [f"party_{i:02d}" for i in range(count)]


def class_vocabulary(cls: str, size: int) -> List[str]:
    """Class hashtags, most frequent first; index 0 is the seed"""
    return [cls] + [f"{cls}_{i:02d}" for i in range(1, size)]


def golden_hashtag(cls: str) -> str:
    return f"ivote_{cls}"


def _rng(config: SynthConfig, stream: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng([config.seed, stream, *keys])


class _World:
    """Vocabularies and per-user profiles shared by all draws"""

    def __init__(self, config: SynthConfig):
        self.config = config
        self.classes = class_names(config.classes)
        self.vocab = {cls: class_vocabulary(cls, config.class_vocab_size) for cls in self.classes}
        width = len(str(config.shared_vocab_size))
        self.shared = [f"topic_{i:0{width}d}" for i in range(config.shared_vocab_size)]
        weights = 1.0 / np.arange(1, config.class_vocab_size + 1) ** config.zipf_exponent
        self.zipf = weights / weights.sum()

        total = config.classes * config.users_per_class + config.neutral_users
        width = len(str(total))
        self.users = [f"u{i:0{width}d}" for i in range(total)]
        self.user_class: List[Optional[str]] = [
            self.classes[i // config.users_per_class]
            if i < config.classes * config.users_per_class
            else None
            for i in range(total)
        ]

    def profile(self, index: int) -> Tuple[float, float]:
        """(activity multiplier, partisanship) of a user"""
        rng = _rng(self.config, _PROFILE_STREAM, index)
        shape = self.config.activity_shape
        activity = rng.gamma(shape, 1.0 / shape)
        partisanship = rng.uniform(self.config.partisanship_min, 1.0)
        return float(activity), float(partisanship)

    def _rival(self, rng: np.random.Generator, cls: str) -> str:
        rivals = [c for c in self.classes if c != cls]
        return rivals[int(rng.integers(len(rivals)))]

    def tweet_hashtags(
        self, rng: np.random.Generator, cls: Optional[str], partisanship: float
    ) -> Set[str]:
        config = self.config
        if rng.random() < config.empty_tweet_prob:
            return set()

        hashtags: Set[str] = set()
        for _ in range(1 + int(rng.poisson(config.hashtags_per_tweet))):
            if cls is not None and rng.random() < partisanship:
                hashtags.add(self.vocab[cls][int(rng.choice(len(self.zipf), p=self.zipf))])
            else:
                hashtags.add(self.shared[int(rng.integers(len(self.shared)))])

        if cls is None:
            if rng.random() < config.neutral_seed_prob:
                hashtags.add(self.classes[int(rng.integers(len(self.classes)))])
            return hashtags

        if rng.random() < config.leak_prob:
            rival = self._rival(rng, cls)
            hashtags.add(self.vocab[rival][1 + int(rng.integers(config.class_vocab_size - 1))])
        if rng.random() < config.rival_mention_prob:
            hashtags.add(cls)
            hashtags.add(self._rival(rng, cls))
        return hashtags

    def user_records(self, index: int) -> List[TweetRecord]:
        user = self.users[index]
        cls = self.user_class[index]
        activity, partisanship = self.profile(index)
        rate = self.config.tweets_per_user_per_day * activity
        records = []
        for day in range(self.config.days):
            rng = _rng(self.config, _TWEET_STREAM, index, day)
            for k in range(int(rng.poisson(rate))):
                records.append(
                    TweetRecord(
                        tweet_id=f"{user}-{day:03d}-{k:03d}",
                        user_id=user,
                        day=day,
                        hashtags=frozenset(self.tweet_hashtags(rng, cls, partisanship)),
                    )
                )
        return records

    def golden_emitters(self, class_index: int) -> List[int]:
        config = self.config
        count = int(round(config.golden_frac * config.users_per_class))
        rng = _rng(config, _GOLDEN_STREAM, class_index)
        offset = class_index * config.users_per_class
        chosen = rng.permutation(config.users_per_class)[:count]
        return sorted(offset + int(i) for i in chosen)


def _add_golden(world: _World, index: int, records: List[TweetRecord]) -> List[TweetRecord]:
    cls = world.user_class[index]
    tag = golden_hashtag(cls)
    if records:
        first = records[0]
        records[0] = TweetRecord(first.tweet_id, first.user_id, first.day, first.hashtags | {tag})
        return records
    rng = _rng(world.config, _GOLDEN_STREAM, len(world.classes), index)
    day = int(rng.integers(world.config.days))
    user = world.users[index]
    return [TweetRecord(f"{user}-{day:03d}-golden", user, day, frozenset({tag}))]


def generate(config: Optional[SynthConfig] = None) -> Tuple[Corpus, UserPartition]:
    """
    Generate a planted-polarization corpus.

    Returns:
        tuple: (corpus, ground-truth partition of the class users that appear
               in the corpus)
    """
    config = config or SynthConfig()
    world = _World(config)
    golden_users = {
        index for c in range(config.classes) for index in world.golden_emitters(c)
    }

    records: List[TweetRecord] = []
    truth: Dict[str, Set[str]] = {cls: set() for cls in world.classes}
    for index, user in enumerate(world.users):
        user_records = world.user_records(index)
        if index in golden_users:
            user_records = _add_golden(world, index, user_records)
        if user_records and world.user_class[index] is not None:
            truth[world.user_class[index]].add(user)
        records.extend(user_records)

    records.sort(key=lambda r: (r.day, r.user_id, r.tweet_id))
    corpus = Corpus(records)
    partition = UserPartition(truth, classes=world.classes)
    logger.info(
        "Generated %d tweets from %d users over %d days (seed %d)",
        len(corpus),
        len(corpus.users),
        config.days,
        config.seed,
    )
    return corpus, partition


def synthetic_class_config(config: Optional[SynthConfig] = None) -> ClassConfig:
    """Class configuration matching a generated corpus"""
    config = config or SynthConfig()
    classes = class_names(config.classes)
    return ClassConfig(
        classes=tuple(classes),
        seed_hashtags={cls: (cls,) for cls in classes},
        golden_hashtags={cls: (golden_hashtag(cls),) for cls in classes},
        top_k=config.effective_top_k,
    )


def synthetic_paths(corpus_path: str) -> Tuple[str, str, str]:
    """Corpus, class configuration and ground-truth paths for a corpus file"""
    stem, _ = os.path.splitext(corpus_path)
    return corpus_path, f"{stem}.config.yml", f"{stem}.truth.json"


def write_synthetic(
    corpus: Corpus, truth: UserPartition, class_config: ClassConfig, corpus_path: str
) -> Tuple[str, str, str]:
    """
    Write the corpus, its class configuration and the ground truth side by side.

    Returns:
        tuple: The three paths written
    """
    corpus_file, config_file, truth_file = synthetic_paths(corpus_path)
    directory = os.path.dirname(corpus_file)
    if directory:
        os.makedirs(directory, exist_ok=True)
    write_corpus(corpus, corpus_file)
    dump_class_config(class_config, config_file)
    with open(truth_file, "w", encoding="utf-8") as f:
        json.dump(truth.to_dict(), f, indent=2, sort_keys=True)
        f.write("\n")
    logger.info("Wrote %s, %s and %s", corpus_file, config_file, truth_file)
    return corpus_file, config_file, truth_file
