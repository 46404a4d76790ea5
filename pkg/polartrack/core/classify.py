"""
User classification step: label users whose polarized tweets for one class
dominate every other class by a factor alpha, keeping the previous label of
users without enough evidence.
"""

from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from polartrack.core.config import exact_ratio
from polartrack.core.corpus import Corpus
from polartrack.core.errors import UnknownUserError
from polartrack.core.partition import HashtagPartition, UserPartition
from polartrack.utils.logger import get_logger
from polartrack.utils.parallel import parallel_map

logger = get_logger(__name__)


def _polarized_tweets(
    corpus: Corpus, user: str, owners: Mapping[str, str], classes: Tuple[str, ...]
) -> Dict[str, FrozenSet[str]]:
    per_class: Dict[str, set] = {cls: set() for cls in classes}
    for tweet_id in corpus.tweets_of(user):
        touched = {owners[h] for h in corpus.record(tweet_id).hashtags if h in owners}
        if len(touched) == 1:
            per_class[touched.pop()].add(tweet_id)
    return {cls: frozenset(ids) for cls, ids in per_class.items()}


def polarized_tweets(
    corpus: Corpus, user: str, hashtag_partition: HashtagPartition
) -> Dict[str, FrozenSet[str]]:
    """
    T_{u,c} for every class: the user's tweets that mention hashtags of class
    c and of no other class. Tweets touching two or more classes are dropped.

    Raises:
        UnknownUserError: If the user has no tweets in the corpus
    """
    if user not in corpus.users:
        raise UnknownUserError(user)
    return _polarized_tweets(
        corpus, user, hashtag_partition.owner_index(), hashtag_partition.classes
    )


def dominant_class(counts: Mapping[str, int], alpha) -> Optional[str]:
    """
    The class whose count exceeds alpha times every other count, if any.

    With alpha > 1 at most one class can satisfy the strict test, and a user
    with all-zero counts never does. alpha is compared as an exact rational.
    """
    alpha = exact_ratio(alpha)
    for cls, count in counts.items():
        if all(count > alpha * other for o, other in counts.items() if o != cls):
            return cls
    return None


def users_class(
    corpus: Corpus,
    hashtag_partition: HashtagPartition,
    previous: UserPartition,
    alpha: float,
    universe: Optional[Iterable[str]] = None,
    threads: Optional[int] = None,
) -> UserPartition:
    """
    Classify users from the current hashtag sets.

    Args:
        corpus: Tweets used as evidence (T_u)
        hashtag_partition: Current H_c family
        previous: Previous U_c family, used as backup for undecided users
        alpha: Dominance factor, > 1
        universe: Users to test; defaults to the corpus users. The temporal
                  driver passes every user of the full stream here while the
                  corpus holds a single day.
        threads: Worker count for the per-user tests

    Returns:
        UserPartition: The new U_c family
    """
    if alpha <= 1:
        raise ValueError(f"alpha must be > 1, got {alpha}")
    alpha = exact_ratio(alpha)

    classes = hashtag_partition.classes
    owners = hashtag_partition.owner_index()
    users: List[str] = sorted(corpus.users if universe is None else set(universe))

    def decide(user: str) -> Optional[str]:
        tweets = _polarized_tweets(corpus, user, owners, classes)
        winner = dominant_class({cls: len(tweets[cls]) for cls in classes}, alpha)
        if winner is not None:
            return winner
        backup = previous.owner(user)
        return backup if backup in classes else None

    decisions = parallel_map(decide, users, threads)

    assignments: Dict[str, set] = {cls: set() for cls in classes}
    for user, cls in zip(users, decisions):
        if cls is not None:
            assignments[cls].add(user)

    result = UserPartition(assignments, classes=classes)
    logger.debug("Users classified: %s", result.sizes())
    return result
