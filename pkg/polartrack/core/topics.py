"""
Hashtag classification step.

Candidates H*_c are the most frequent hashtags over all tweets of the users
currently in class c. Each non-seed candidate h gets a score per class

    S_c(h) = |T_h & T_{H*_c}| / |T_{H*_c}| * prod_{c' != c} (1 - |T_h & T_{H*_c'}| / |T_{H*_c'}|)

and joins class c when S_c(h) > beta * S_c'(h) for every other class c'.
Scores are exact fractions so the comparison does not depend on rounding.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence

from polartrack.core.config import exact_ratio
from polartrack.core.corpus import Corpus, top_hashtags, tweet_ids_of_users
from polartrack.core.partition import HashtagPartition, UserPartition
from polartrack.utils.logger import get_logger
from polartrack.utils.parallel import parallel_map

logger = get_logger(__name__)


@dataclass(frozen=True)
class HashtagScore:
    """S_c(h) for every class, in class order"""

    hashtag: str
    per_class: Mapping[str, Fraction]

    def as_floats(self) -> Dict[str, float]:
        return {cls: float(value) for cls, value in self.per_class.items()}

    def winner(self, beta) -> Optional[str]:
        """The class whose score beats beta times every other score, if any"""
        beta = exact_ratio(beta)
        for cls, value in self.per_class.items():
            if all(
                value > beta * other
                for o, other in self.per_class.items()
                if o != cls
            ):
                return cls
        return None


class ScoreRow(NamedTuple):
    hashtag: str
    cls: str
    score: float


def candidate_sets(
    corpus: Corpus, users: UserPartition, top_k: int
) -> Dict[str, FrozenSet[str]]:
    """H*_c: the top_k hashtags over T_c, all tweets written by users of U_c"""
    return {
        cls: frozenset(
            top_hashtags(corpus, tweet_ids_of_users(corpus, sorted(users[cls])), top_k)
        )
        for cls in users.classes
    }


def candidate_tweet_sets(
    corpus: Corpus, candidates: Mapping[str, Iterable[str]]
) -> Dict[str, FrozenSet[str]]:
    """T_{H*_c}: corpus tweets containing at least one hashtag of H*_c"""
    return {cls: corpus.tweets_with_any(hashtags) for cls, hashtags in candidates.items()}


def score(
    corpus: Corpus, h: str, candidate_tweet_sets: Mapping[str, FrozenSet[str]]
) -> HashtagScore:
    """
    Score one hashtag against every class.

    An empty T_{H*_c} gives S_c(h) = 0; an empty T_{H*_c'} contributes a
    factor of 1 to the scores of the other classes.
    """
    tweets_h = frozenset(corpus.by_hashtag.get(h, ()))
    shares: Dict[str, Optional[Fraction]] = {}
    for cls, tweet_ids in candidate_tweet_sets.items():
        if tweet_ids:
            shares[cls] = Fraction(len(tweets_h & tweet_ids), len(tweet_ids))
        else:
            shares[cls] = None

    per_class: Dict[str, Fraction] = {}
    for cls, share in shares.items():
        if share is None:
            per_class[cls] = Fraction(0)
            continue
        value = share
        for other, other_share in shares.items():
            if other != cls and other_share is not None:
                value *= 1 - other_share
        per_class[cls] = value
    return HashtagScore(hashtag=h, per_class=per_class)


def score_candidates(
    corpus: Corpus,
    users: UserPartition,
    seeds: HashtagPartition,
    top_k: int,
    threads: Optional[int] = None,
) -> List[HashtagScore]:
    """
    Score every non-seed candidate hashtag.

    Returns:
        list: HashtagScore objects sorted by hashtag
    """
    candidates = candidate_sets(corpus, users, top_k)
    tweet_sets = candidate_tweet_sets(corpus, candidates)
    seed_symbols = seeds.assigned()
    pool = sorted(
        {h for hashtags in candidates.values() for h in hashtags} - seed_symbols
    )
    logger.debug(
        "Scoring %d candidate hashtags (candidate set sizes: %s)",
        len(pool),
        {cls: len(hs) for cls, hs in candidates.items()},
    )
    return parallel_map(lambda h: score(corpus, h, tweet_sets), pool, threads)


def assign_hashtags(
    scores: Iterable[HashtagScore], seeds: HashtagPartition, beta
) -> HashtagPartition:
    """Apply the beta gate and add each class's seeds back"""
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    beta = exact_ratio(beta)
    assignments: Dict[str, set] = {cls: set(seeds[cls]) for cls in seeds.classes}
    for entry in scores:
        if entry.hashtag in seeds:
            continue
        winner = entry.winner(beta)
        if winner is not None:
            assignments[winner].add(entry.hashtag)
    return HashtagPartition(assignments, classes=seeds.classes)


def hashtags_class(
    corpus: Corpus,
    users: UserPartition,
    seeds: HashtagPartition,
    top_k: int,
    beta,
    threads: Optional[int] = None,
) -> HashtagPartition:
    """
    Classify candidate hashtags from the current user classes.

    Args:
        corpus: Tweets T used for candidates and scores
        users: Current U_c family
        seeds: Seed hashtags per class; never scored, always kept
        top_k: Candidate cap per class
        beta: Dominance factor, >= 1
        threads: Worker count for scoring

    Returns:
        HashtagPartition: The new H_c family
    """
    scores = score_candidates(corpus, users, seeds, top_k, threads)
    return assign_hashtags(scores, seeds, beta)


def score_table(
    scores: Iterable[HashtagScore], classes: Optional[Sequence[str]] = None
) -> List[ScoreRow]:
    """
    Ranked (hashtag, class, score) rows: descending score, then hashtag, then
    class order.
    """
    scores = list(scores)
    if classes is None:
        classes = list(scores[0].per_class) if scores else []
    position = {cls: i for i, cls in enumerate(classes)}
    ranked = sorted(
        (
            (value, entry.hashtag, cls)
            for entry in scores
            for cls, value in entry.per_class.items()
        ),
        key=lambda item: (-item[0], item[1], position[item[2]]),
    )
    return [ScoreRow(hashtag, cls, float(value)) for value, hashtag, cls in ranked]
