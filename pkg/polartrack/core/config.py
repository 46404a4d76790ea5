"""
Class configuration: polarization classes, seed and golden hashtags, and the
algorithm parameters.

A configuration file is YAML:

    classes: [pd, m5s]
    seed:
      pd: pd
      m5s: [m5s, grillo]
    golden:
      pd: ivotepd
      m5s: ivotem5s
    alpha: 2
    beta: 1
    top_k: 500
    max_iterations: 10
"""

import os
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Tuple

import yaml

from polartrack.core.corpus import normalize_hashtag
from polartrack.core.errors import ConfigValidationError
from polartrack.utils.logger import get_logger

logger = get_logger(__name__)

GOLDEN_RULES = ("exclusive", "dominance")

DEFAULT_ALPHA = 2.0
DEFAULT_BETA = 1.0
DEFAULT_TOP_K = 500
DEFAULT_MAX_ITERATIONS = 10


@dataclass(frozen=True)
class ClassConfig:
    """
    Validated configuration of a classification run.

    Seed and golden hashtags are kept as ordered tuples per class; the first
    seed of a class is its designated seed (used by the k-means baseline).
    """

    classes: Tuple[str, ...]
    seed_hashtags: Mapping[str, Tuple[str, ...]]
    golden_hashtags: Mapping[str, Tuple[str, ...]]
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    top_k: int = DEFAULT_TOP_K
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    baseline_top_k: int = DEFAULT_TOP_K
    golden_rule: str = "exclusive"
    _seed_sets: Dict[str, FrozenSet[str]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(
            self,
            "seed_hashtags",
            {c: tuple(hs) for c, hs in dict(self.seed_hashtags).items()},
        )
        object.__setattr__(
            self,
            "golden_hashtags",
            {c: tuple(hs) for c, hs in dict(self.golden_hashtags).items()},
        )
        self._validate()
        object.__setattr__(
            self,
            "_seed_sets",
            {c: frozenset(self.seed_hashtags[c]) for c in self.classes},
        )

    def _validate(self) -> None:
        problems: List[str] = []

        if len(self.classes) < 2:
            problems.append("at least 2 classes are required")
        if len(set(self.classes)) != len(self.classes):
            problems.append("class ids must be unique")

        for name, mapping in (
            ("seed", self.seed_hashtags),
            ("golden", self.golden_hashtags),
        ):
            extra = sorted(set(mapping) - set(self.classes))
            if extra:
                problems.append(f"{name} hashtags given for unknown class(es): {extra}")
            for cls in self.classes:
                hashtags = mapping.get(cls, ())
                if not hashtags:
                    problems.append(f"class {cls!r} needs at least one {name} hashtag")
                for hashtag in hashtags:
                    if not isinstance(hashtag, str) or hashtag != _safe_normalize(hashtag):
                        problems.append(
                            f"{name} hashtag {hashtag!r} of class {cls!r} is not normalized"
                        )
            for left, right in combinations(self.classes, 2):
                shared = set(mapping.get(left, ())) & set(mapping.get(right, ()))
                if shared:
                    problems.append(
                        f"{name} hashtags {sorted(shared)} shared by classes "
                        f"{left!r} and {right!r}"
                    )

        overlap = set(self._flatten(self.seed_hashtags)) & set(
            self._flatten(self.golden_hashtags)
        )
        if overlap:
            problems.append(f"hashtags {sorted(overlap)} are both seed and golden")

        if not _is_number(self.alpha) or self.alpha <= 1:
            problems.append(f"alpha must be > 1, got {self.alpha!r}")
        if not _is_number(self.beta) or self.beta < 1:
            problems.append(f"beta must be >= 1, got {self.beta!r}")
        for name in ("top_k", "max_iterations", "baseline_top_k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                problems.append(f"{name} must be a positive integer, got {value!r}")
        if self.golden_rule not in GOLDEN_RULES:
            problems.append(
                f"golden_rule must be one of {list(GOLDEN_RULES)}, got {self.golden_rule!r}"
            )

        if problems:
            raise ConfigValidationError(problems)

    @staticmethod
    def _flatten(mapping: Mapping[str, Tuple[str, ...]]) -> List[str]:
        return [h for hashtags in mapping.values() for h in hashtags]

    def seeds_of(self, cls: str) -> FrozenSet[str]:
        return self._seed_sets[cls]

    def designated_seed(self, cls: str) -> str:
        return self.seed_hashtags[cls][0]

    def all_seed_hashtags(self) -> FrozenSet[str]:
        return frozenset(self._flatten(self.seed_hashtags))

    def all_golden_hashtags(self) -> FrozenSet[str]:
        return frozenset(self._flatten(self.golden_hashtags))

    def with_overrides(self, **values: Any) -> "ClassConfig":
        """
        Return a copy with some parameters replaced.

        None values are ignored so CLI flags that were not given leave the
        file's value in place. The result is validated again.
        """
        changes = {key: value for key, value in values.items() if value is not None}
        unknown = set(changes) - {f.name for f in fields(self) if f.init}
        if unknown:
            raise ConfigValidationError([f"unknown parameter(s): {sorted(unknown)}"])
        if not changes:
            return self
        logger.debug("Applying configuration overrides: %s", changes)
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "classes": list(self.classes),
            "seed": {c: list(self.seed_hashtags[c]) for c in self.classes},
            "golden": {c: list(self.golden_hashtags[c]) for c in self.classes},
            "alpha": self.alpha,
            "beta": self.beta,
            "top_k": self.top_k,
            "baseline_top_k": self.baseline_top_k,
            "max_iterations": self.max_iterations,
            "golden_rule": self.golden_rule,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ClassConfig":
        """Build a configuration from the YAML structure, normalizing hashtags"""
        if not isinstance(data, Mapping):
            raise ConfigValidationError(["configuration must be a mapping"])

        problems: List[str] = []
        for key in ("classes", "seed", "golden"):
            if key not in data:
                problems.append(f"missing key {key!r}")
        if problems:
            raise ConfigValidationError(problems)

        raw_classes = data["classes"]
        if not isinstance(raw_classes, list):
            raise ConfigValidationError(["'classes' must be a list"])
        classes = tuple(str(c) for c in raw_classes)

        seeds = _hashtag_mapping(data["seed"], "seed")
        golden = _hashtag_mapping(data["golden"], "golden")

        params = {}
        for key, target in (
            ("alpha", "alpha"),
            ("beta", "beta"),
            ("top_k", "top_k"),
            ("baseline_top_k", "baseline_top_k"),
            ("max_iterations", "max_iterations"),
            ("golden_rule", "golden_rule"),
        ):
            if key in data:
                params[target] = data[key]

        return cls(classes=classes, seed_hashtags=seeds, golden_hashtags=golden, **params)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def exact_ratio(value: Any) -> Fraction:
    """
    Exact rational for a dominance factor.

    Floats go through their shortest decimal text, so 1.15 becomes 23/20
    rather than the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def _safe_normalize(hashtag: str) -> Optional[str]:
    try:
        return normalize_hashtag(hashtag)
    except ValueError:
        return None


def _hashtag_mapping(raw: Any, name: str) -> Dict[str, Tuple[str, ...]]:
    if not isinstance(raw, Mapping):
        raise ConfigValidationError([f"'{name}' must map each class to hashtags"])
    result: Dict[str, Tuple[str, ...]] = {}
    problems: List[str] = []
    for cls, value in raw.items():
        values = [value] if isinstance(value, str) else value
        if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
            problems.append(f"{name} hashtags of class {cls!r} must be a string or a list")
            continue
        normalized: List[str] = []
        for v in values:
            symbol = _safe_normalize(v)
            if symbol is None:
                problems.append(f"empty {name} hashtag for class {cls!r}")
            elif symbol not in normalized:
                normalized.append(symbol)
        result[str(cls)] = tuple(normalized)
    if problems:
        raise ConfigValidationError(problems)
    return result


def load_class_config(path: str) -> ClassConfig:
    """
    Load and validate a YAML class configuration.

    Raises:
        FileNotFoundError: If the file does not exist
        ConfigValidationError: If the YAML is malformed or invalid
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Configuration file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigValidationError([f"malformed YAML in {path}: {e}"]) from e
    config = ClassConfig.from_dict(data or {})
    logger.debug("Loaded class configuration from %s: %s", path, config.to_dict())
    return config


def dump_class_config(config: ClassConfig, path: str) -> None:
    """Write the configuration as YAML"""
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(config.to_dict(), f, sort_keys=False, allow_unicode=True)
