"""
Tweet corpus data model, line-delimited ingestion and inverted indexes
"""

import json
import os
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from polartrack.core.errors import CorpusFormatError, DuplicateTweetError
from polartrack.utils.logger import get_logger

if TYPE_CHECKING:
    from polartrack.core.config import ClassConfig

logger = get_logger(__name__)


def normalize_hashtag(raw: str) -> str:
    """
    Turn a raw hashtag into its canonical symbol.

    Surrounding whitespace and one leading '#' are stripped, then the text is
    lowercased with Python's default Unicode case mapping.

    Raises:
        ValueError: If nothing is left after normalization
    """
    symbol = raw.strip()
    if symbol.startswith("#"):
        symbol = symbol[1:]
    symbol = symbol.lower()
    if not symbol:
        raise ValueError(f"Empty hashtag after normalization: {raw!r}")
    return symbol


@dataclass(frozen=True)
class TweetRecord:
    """One message of the stream: author, day index and hashtag set"""

    tweet_id: str
    user_id: str
    day: int
    hashtags: FrozenSet[str] = frozenset()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.tweet_id,
            "user": self.user_id,
            "day": self.day,
            "hashtags": sorted(self.hashtags),
        }


def _freeze_index(index: Dict[Any, List[str]]) -> Mapping[Any, Tuple[str, ...]]:
    return MappingProxyType({key: tuple(ids) for key, ids in index.items()})


class Corpus:
    """
    Immutable indexed collection of TweetRecords.

    Indexes:
        by_user:      user id -> tweet ids (T_u)
        by_hashtag:   hashtag -> tweet ids (T_h)
        by_day:       day -> tweet ids
        hashtag_freq: hashtag -> number of tweets containing it
    """

    __slots__ = (
        "_records",
        "_by_id",
        "_users",
        "_by_user",
        "_by_hashtag",
        "_by_day",
        "_hashtag_freq",
    )

    def __init__(self, records: Iterable[TweetRecord] = ()):
        records = tuple(records)
        by_id: Dict[str, TweetRecord] = {}
        by_user: Dict[str, List[str]] = {}
        by_hashtag: Dict[str, List[str]] = {}
        by_day: Dict[int, List[str]] = {}

        for record in records:
            if record.tweet_id in by_id:
                raise DuplicateTweetError(f"Duplicate tweet id {record.tweet_id!r}")
            by_id[record.tweet_id] = record
            by_user.setdefault(record.user_id, []).append(record.tweet_id)
            by_day.setdefault(record.day, []).append(record.tweet_id)
            for hashtag in record.hashtags:
                by_hashtag.setdefault(hashtag, []).append(record.tweet_id)

        self._records = records
        self._by_id = MappingProxyType(by_id)
        self._users = frozenset(by_user)
        self._by_user = _freeze_index(by_user)
        self._by_hashtag = _freeze_index(by_hashtag)
        self._by_day = _freeze_index(by_day)
        self._hashtag_freq = MappingProxyType(
            {hashtag: len(ids) for hashtag, ids in by_hashtag.items()}
        )

    @property
    def records(self) -> Tuple[TweetRecord, ...]:
        return self._records

    @property
    def users(self) -> FrozenSet[str]:
        return self._users

    @property
    def by_user(self) -> Mapping[str, Tuple[str, ...]]:
        return self._by_user

    @property
    def by_hashtag(self) -> Mapping[str, Tuple[str, ...]]:
        return self._by_hashtag

    @property
    def by_day(self) -> Mapping[int, Tuple[str, ...]]:
        return self._by_day

    @property
    def hashtag_freq(self) -> Mapping[str, int]:
        return self._hashtag_freq

    @property
    def days(self) -> List[int]:
        """Sorted day indexes present in the corpus"""
        return sorted(self._by_day)

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return self._records == other._records

    def __hash__(self):
        return hash(self._records)

    def __repr__(self) -> str:
        return (
            f"Corpus(records={len(self._records)}, users={len(self._users)}, "
            f"hashtags={len(self._by_hashtag)})"
        )

    def record(self, tweet_id: str) -> TweetRecord:
        return self._by_id[tweet_id]

    def tweets_of(self, user_id: str) -> Tuple[str, ...]:
        """T_u; empty for users with no tweets in this corpus"""
        return self._by_user.get(user_id, ())

    def user_hashtags(self, user_id: str) -> FrozenSet[str]:
        """H_u, the union of hashtags over the user's tweets"""
        hashtags = set()
        for tweet_id in self.tweets_of(user_id):
            hashtags.update(self._by_id[tweet_id].hashtags)
        return frozenset(hashtags)

    def tweets_with_any(self, hashtags: Iterable[str]) -> FrozenSet[str]:
        """Tweets containing at least one of the given hashtags"""
        tweet_ids = set()
        for hashtag in hashtags:
            tweet_ids.update(self._by_hashtag.get(hashtag, ()))
        return frozenset(tweet_ids)

    def day_slice(self, day: int) -> "Corpus":
        """Corpus restricted to the records of one day"""
        return Corpus(self._by_id[tweet_id] for tweet_id in self._by_day.get(day, ()))

    def without_hashtags(self, hashtags: Iterable[str]) -> "Corpus":
        """Copy of the corpus with the given hashtags removed from every record"""
        removed = frozenset(hashtags)
        if not removed.intersection(self._by_hashtag):
            return self
        return Corpus(
            TweetRecord(
                tweet_id=record.tweet_id,
                user_id=record.user_id,
                day=record.day,
                hashtags=record.hashtags - removed,
            )
            for record in self._records
        )


def _parse_line(raw: bytes, path: str, line_number: int) -> TweetRecord:
    try:
        line = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusFormatError("invalid UTF-8", path, line_number) from e
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise CorpusFormatError(f"invalid JSON ({e.msg})", path, line_number) from e

    if not isinstance(data, dict):
        raise CorpusFormatError("record must be a JSON object", path, line_number)

    missing = [key for key in ("id", "user", "day", "hashtags") if key not in data]
    if missing:
        raise CorpusFormatError(
            f"missing field(s): {', '.join(missing)}", path, line_number
        )

    tweet_id, user_id, day, raw_hashtags = (
        data["id"],
        data["user"],
        data["day"],
        data["hashtags"],
    )
    if not isinstance(tweet_id, str) or not tweet_id:
        raise CorpusFormatError("'id' must be a non-empty string", path, line_number)
    if not isinstance(user_id, str) or not user_id:
        raise CorpusFormatError("'user' must be a non-empty string", path, line_number)
    if isinstance(day, bool) or not isinstance(day, int) or day < 0:
        raise CorpusFormatError("'day' must be an integer >= 0", path, line_number)
    if not isinstance(raw_hashtags, list) or not all(
        isinstance(h, str) for h in raw_hashtags
    ):
        raise CorpusFormatError(
            "'hashtags' must be an array of strings", path, line_number
        )

    try:
        hashtags = frozenset(normalize_hashtag(h) for h in raw_hashtags)
    except ValueError as e:
        raise CorpusFormatError(str(e), path, line_number) from e

    return TweetRecord(tweet_id=tweet_id, user_id=user_id, day=day, hashtags=hashtags)


def load_corpus(path: str, config: Optional["ClassConfig"] = None) -> Corpus:
    """
    Load a line-delimited JSON corpus file.

    Blank lines are skipped. Records without hashtags are kept: they still
    count as users of the stream.

    Args:
        path: Path of the corpus file
        config: Optional class configuration; seed and golden hashtags that
                never occur in the corpus are reported as warnings

    Returns:
        Corpus: The indexed corpus

    Raises:
        FileNotFoundError: If the file does not exist
        CorpusFormatError: On a malformed line or a duplicate tweet id
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Corpus file not found: {path}")

    records: List[TweetRecord] = []
    seen_ids: Dict[str, int] = {}
    with open(path, "rb") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            record = _parse_line(line, path, line_number)
            if record.tweet_id in seen_ids:
                raise DuplicateTweetError(
                    f"duplicate tweet id {record.tweet_id!r} "
                    f"(first seen on line {seen_ids[record.tweet_id]})",
                    path,
                    line_number,
                )
            seen_ids[record.tweet_id] = line_number
            records.append(record)

    corpus = Corpus(records)
    logger.info(
        "Loaded %d records from %s (%d users, %d distinct hashtags)",
        len(corpus),
        path,
        len(corpus.users),
        len(corpus.by_hashtag),
    )

    if config is not None:
        for kind, hashtags in (
            ("seed", config.all_seed_hashtags()),
            ("golden", config.all_golden_hashtags()),
        ):
            absent = sorted(h for h in hashtags if h not in corpus.hashtag_freq)
            if absent:
                logger.warning(
                    "Configured %s hashtag(s) never occur in %s: %s",
                    kind,
                    path,
                    ", ".join(absent),
                )

    return corpus


def write_corpus(corpus: Corpus, path: str) -> None:
    """Write the corpus as one compact JSON object per line"""
    with open(path, "w", encoding="utf-8") as f:
        for record in corpus.records:
            f.write(
                json.dumps(
                    record.to_dict(),
                    sort_keys=True,
                    ensure_ascii=False,
                    separators=(",", ":"),
                )
            )
            f.write("\n")
    logger.debug("Wrote %d records to %s", len(corpus), path)


def strip_golden(corpus: Corpus, config: "ClassConfig") -> Corpus:
    """
    Remove every golden hashtag from every record.

    Records left without hashtags stay in the corpus, so the user set and the
    record count never change.
    """
    stripped = corpus.without_hashtags(config.all_golden_hashtags())
    if stripped is not corpus:
        logger.info("Removed golden hashtags from the corpus before classification")
    return stripped


def top_hashtags(corpus: Corpus, tweet_ids: Iterable[str], k: int) -> List[str]:
    """
    The k most frequent hashtags over a tweet subset.

    Counts are tweet-level. Ties are broken by ascending hashtag symbol.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    counts: Counter = Counter()
    for tweet_id in set(tweet_ids):
        counts.update(corpus.record(tweet_id).hashtags)
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [hashtag for hashtag, _ in ranked[:k]]


@dataclass(frozen=True)
class CorpusStatistics:
    """Summary figures of a corpus"""

    tweets: int
    users: int
    users_with_hashtags: int
    distinct_hashtags: int
    days: int

    @property
    def hashtag_user_fraction(self) -> float:
        return self.users_with_hashtags / self.users if self.users else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tweets": self.tweets,
            "users": self.users,
            "users_with_hashtags": self.users_with_hashtags,
            "hashtag_user_fraction": self.hashtag_user_fraction,
            "distinct_hashtags": self.distinct_hashtags,
            "days": self.days,
        }


def corpus_statistics(corpus: Corpus) -> CorpusStatistics:
    users_with_hashtags = sum(
        1
        for user in corpus.users
        if any(corpus.record(t).hashtags for t in corpus.tweets_of(user))
    )
    return CorpusStatistics(
        tweets=len(corpus),
        users=len(corpus.users),
        users_with_hashtags=users_with_hashtags,
        distinct_hashtags=len(corpus.by_hashtag),
        days=len(corpus.by_day),
    )


def tweet_ids_of_users(corpus: Corpus, users: Sequence[str]) -> FrozenSet[str]:
    """Union of T_u over the given users"""
    tweet_ids = set()
    for user in users:
        tweet_ids.update(corpus.tweets_of(user))
    return frozenset(tweet_ids)
