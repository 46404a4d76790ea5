"""
Golden set construction.

The golden set Z holds users that can be labelled with certainty from
handpicked golden hashtags. Two construction rules are available, selected by
the ``golden_rule`` configuration key:

  exclusive  a user joins Z_c when the golden hashtags in their tweets all
             belong to class c (the default)
  dominance  the user classification step run once with the golden hashtags
             as class hashtags and no previous classification
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet

from polartrack.core.classify import users_class
from polartrack.core.config import ClassConfig
from polartrack.core.corpus import Corpus
from polartrack.core.partition import ClassPartition, HashtagPartition, UserPartition
from polartrack.utils.logger import get_logger

logger = get_logger(__name__)


class GoldenSet(ClassPartition):
    """Z_c per class; a partition of Z"""

    __slots__ = ()
    item_name = "golden user"

    @property
    def members(self) -> Dict[str, FrozenSet[str]]:
        return self.assignments

    def golden_users(self) -> FrozenSet[str]:
        """Z"""
        return self.assigned()


class GoldenSetStrategy(ABC):
    """Abstract base class for golden set construction rules"""

    name = ""

    @abstractmethod
    def build(self, corpus: Corpus, config: ClassConfig) -> GoldenSet:
        """
        Build the golden set from a corpus that still carries golden hashtags

        Args:
            corpus: The unstripped corpus
            config: Class configuration holding the golden hashtags

        Returns:
            GoldenSet: Z_c for every configured class
        """

    @staticmethod
    def golden_partition(config: ClassConfig) -> HashtagPartition:
        return HashtagPartition(
            {cls: config.golden_hashtags[cls] for cls in config.classes},
            classes=config.classes,
        )


class ExclusiveGoldenStrategy(GoldenSetStrategy):
    """Users whose golden hashtags all belong to one class"""

    name = "exclusive"

    def build(self, corpus: Corpus, config: ClassConfig) -> GoldenSet:
        owners = self.golden_partition(config).owner_index()
        members: Dict[str, set] = {cls: set() for cls in config.classes}
        conflicted = 0
        for user in sorted(corpus.users):
            touched = {
                owners[h]
                for tweet_id in corpus.tweets_of(user)
                for h in corpus.record(tweet_id).hashtags
                if h in owners
            }
            if len(touched) == 1:
                members[touched.pop()].add(user)
            elif touched:
                conflicted += 1
        if conflicted:
            logger.info(
                "Excluded %d user(s) using golden hashtags of several classes",
                conflicted,
            )
        return GoldenSet(members, classes=config.classes)


class DominanceGoldenStrategy(GoldenSetStrategy):
    """Users whose golden-hashtag tweets pass the alpha dominance test"""

    name = "dominance"

    def build(self, corpus: Corpus, config: ClassConfig) -> GoldenSet:
        partition = users_class(
            corpus,
            self.golden_partition(config),
            UserPartition.empty(config.classes),
            config.alpha,
        )
        return GoldenSet(partition.assignments, classes=config.classes)


class GoldenStrategyFactory:
    """Factory for creating the golden set strategy named in a configuration"""

    _strategies = {
        ExclusiveGoldenStrategy.name: ExclusiveGoldenStrategy,
        DominanceGoldenStrategy.name: DominanceGoldenStrategy,
    }

    @staticmethod
    def create(config: ClassConfig) -> GoldenSetStrategy:
        try:
            strategy_class = GoldenStrategyFactory._strategies[config.golden_rule]
        except KeyError:
            raise ValueError(f"Unknown golden rule: {config.golden_rule!r}") from None
        return strategy_class()


def build_golden(corpus: Corpus, config: ClassConfig) -> GoldenSet:
    """
    Build Z with the configured rule.

    The corpus must not be stripped of golden hashtags yet.
    """
    golden = GoldenStrategyFactory.create(config).build(corpus, config)
    logger.info(
        "Golden set (%s rule): %d users %s",
        config.golden_rule,
        len(golden.golden_users()),
        golden.sizes(),
    )
    return golden


@dataclass(frozen=True)
class GoldenSummary:
    """Golden hashtag usage per class: tweets carrying them and |Z_c|"""

    classes: tuple
    tweets: Dict[str, int]
    users: Dict[str, int]
    total_tweets: int
    total_users: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "per_class": {
                cls: {"tweets": self.tweets[cls], "users": self.users[cls]}
                for cls in self.classes
            },
            "total": {"tweets": self.total_tweets, "users": self.total_users},
        }


def golden_summary(corpus: Corpus, golden: GoldenSet, config: ClassConfig) -> GoldenSummary:
    tweets = {
        cls: len(corpus.tweets_with_any(config.golden_hashtags[cls]))
        for cls in config.classes
    }
    return GoldenSummary(
        classes=tuple(config.classes),
        tweets=tweets,
        users=golden.sizes(),
        total_tweets=len(corpus.tweets_with_any(config.all_golden_hashtags())),
        total_users=len(golden.golden_users()),
    )
