"""
Seeded k-means baseline.

Users become L2-normalised hashtag count vectors over the most frequent
hashtags of the corpus. One cluster per class starts from a one-hot centroid
at the class's designated seed hashtag, so there is no random initialisation.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from sklearn.preprocessing import normalize

from polartrack.core.config import ClassConfig
from polartrack.core.corpus import Corpus, top_hashtags
from polartrack.core.errors import FeatureSpaceError
from polartrack.core.partition import UserPartition
from polartrack.utils.logger import get_logger

logger = get_logger(__name__)

MAX_ROUNDS = 100


@dataclass(frozen=True, eq=False)
class UserVector:
    user_id: str
    features: np.ndarray


@dataclass(frozen=True)
class KMeansResult:
    """Final clustering plus convergence information"""

    partition: UserPartition
    rounds: int
    converged: bool
    wcss: Tuple[float, ...] = ()


def build_vectors(corpus: Corpus, k: int) -> Tuple[List[UserVector], Dict[str, int]]:
    """
    Build unit-norm user vectors over the global top-k hashtags.

    A feature counts the user's tweets containing the hashtag. Users whose
    tweets carry none of the top-k hashtags are left out.

    Returns:
        tuple: (vectors sorted by user id, hashtag -> dimension)
    """
    dimensions = top_hashtags(corpus, (r.tweet_id for r in corpus.records), k)
    feature_index = {hashtag: i for i, hashtag in enumerate(dimensions)}

    users = sorted(corpus.users)
    counts = np.zeros((len(users), len(feature_index)), dtype=float)
    for row, user in enumerate(users):
        for tweet_id in corpus.tweets_of(user):
            for hashtag in corpus.record(tweet_id).hashtags:
                column = feature_index.get(hashtag)
                if column is not None:
                    counts[row, column] += 1

    keep = counts.sum(axis=1) > 0
    matrix = normalize(counts[keep], norm="l2") if keep.any() else counts[keep]
    kept_users = [user for user, flag in zip(users, keep) if flag]
    logger.debug(
        "Built %d user vectors over %d dimensions (%d users without features)",
        len(kept_users),
        len(feature_index),
        len(users) - len(kept_users),
    )
    vectors = [UserVector(user, matrix[i]) for i, user in enumerate(kept_users)]
    return vectors, feature_index


def _wcss(matrix: np.ndarray, labels: np.ndarray, centroids: np.ndarray) -> float:
    return float(((matrix - centroids[labels]) ** 2).sum())


def seeded_kmeans(
    vectors: List[UserVector],
    feature_index: Dict[str, int],
    config: ClassConfig,
    max_rounds: int = MAX_ROUNDS,
) -> KMeansResult:
    """
    Lloyd iterations from one-hot seed centroids.

    Distance ties go to the earlier class in configuration order. A cluster
    that loses all its users keeps its centroid. Iteration stops when the
    assignment no longer changes or after max_rounds.

    Raises:
        FeatureSpaceError: If a designated seed hashtag is not a dimension
    """
    classes = config.classes
    centroids = np.zeros((len(classes), len(feature_index)), dtype=float)
    for i, cls in enumerate(classes):
        seed = config.designated_seed(cls)
        if seed not in feature_index:
            raise FeatureSpaceError(
                f"Seed hashtag {seed!r} of class {cls!r} is not among the "
                f"{len(feature_index)} most frequent hashtags"
            )
        centroids[i, feature_index[seed]] = 1.0

    if not vectors:
        return KMeansResult(UserPartition.empty(classes), rounds=0, converged=True)

    matrix = np.vstack([v.features for v in vectors])
    squared_norms = (matrix ** 2).sum(axis=1)[:, None]

    labels: Optional[np.ndarray] = None
    history: List[float] = []
    converged = False
    rounds = 0
    for _ in range(max_rounds):
        distances = (
            squared_norms
            - 2 * matrix @ centroids.T
            + (centroids ** 2).sum(axis=1)[None, :]
        )
        assigned = np.argmin(distances, axis=1)
        if labels is not None and np.array_equal(assigned, labels):
            converged = True
            break
        labels = assigned
        rounds += 1

        for i in range(len(classes)):
            members = matrix[labels == i]
            if len(members):
                centroids[i] = members.mean(axis=0)
        history.append(_wcss(matrix, labels, centroids))

    if not converged:
        logger.warning("k-means stopped after %d rounds without converging", max_rounds)

    assignments: Dict[str, List[str]] = {cls: [] for cls in classes}
    for vector, label in zip(vectors, labels):
        assignments[classes[int(label)]].append(vector.user_id)
    partition = UserPartition(assignments, classes=classes)
    logger.info("k-means: %d round(s), clusters %s", rounds, partition.sizes())
    return KMeansResult(partition, rounds=rounds, converged=converged, wcss=tuple(history))


def run_baseline(corpus: Corpus, config: ClassConfig) -> KMeansResult:
    """Vectorise a stripped corpus with config.baseline_top_k dimensions and cluster it"""
    vectors, feature_index = build_vectors(corpus, config.baseline_top_k)
    return seeded_kmeans(vectors, feature_index, config)
