"""
Per-class disjoint families of users (U_c) or hashtags (H_c)
"""

from typing import Any, Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Type, TypeVar

P = TypeVar("P", bound="ClassPartition")


class ClassPartition:
    """
    Ordered mapping class -> frozenset of items with pairwise disjoint sets.

    Items in no set are unassigned. Instances are immutable and compare equal
    when classes and every set are equal.
    """

    __slots__ = ("_classes", "_assignments", "_owner")

    item_name = "item"

    def __init__(self, assignments: Mapping[str, Iterable[str]], classes: Optional[Sequence[str]] = None):
        if classes is None:
            classes = list(assignments)
        self._classes: Tuple[str, ...] = tuple(classes)
        unknown = set(assignments) - set(self._classes)
        if unknown:
            raise ValueError(f"Assignments for unknown class(es): {sorted(unknown)}")

        self._assignments: Dict[str, FrozenSet[str]] = {
            cls: frozenset(assignments.get(cls, ())) for cls in self._classes
        }
        owner: Dict[str, str] = {}
        for cls in self._classes:
            for item in self._assignments[cls]:
                if item in owner:
                    raise ValueError(
                        f"{self.item_name} {item!r} assigned to both "
                        f"{owner[item]!r} and {cls!r}"
                    )
                owner[item] = cls
        self._owner = owner

    @classmethod
    def empty(cls: Type[P], classes: Sequence[str]) -> P:
        return cls({}, classes=classes)

    @property
    def classes(self) -> Tuple[str, ...]:
        return self._classes

    @property
    def assignments(self) -> Dict[str, FrozenSet[str]]:
        return dict(self._assignments)

    def __getitem__(self, cls: str) -> FrozenSet[str]:
        return self._assignments[cls]

    def __iter__(self) -> Iterator[str]:
        return iter(self._classes)

    def __contains__(self, item: str) -> bool:
        return item in self._owner

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassPartition):
            return NotImplemented
        return self._classes == other._classes and self._assignments == other._assignments

    def __hash__(self):
        return hash((self._classes, tuple(self._assignments[c] for c in self._classes)))

    def __repr__(self) -> str:
        sizes = ", ".join(f"{c}={len(self._assignments[c])}" for c in self._classes)
        return f"{type(self).__name__}({sizes})"

    def owner(self, item: str) -> Optional[str]:
        """Class of an item, or None when unassigned"""
        return self._owner.get(item)

    def owner_index(self) -> Dict[str, str]:
        return dict(self._owner)

    def assigned(self) -> FrozenSet[str]:
        """Union of all class sets"""
        return frozenset(self._owner)

    def sizes(self) -> Dict[str, int]:
        return {cls: len(self._assignments[cls]) for cls in self._classes}

    def to_dict(self) -> Dict[str, Any]:
        return {cls: sorted(self._assignments[cls]) for cls in self._classes}

    @classmethod
    def from_dict(cls: Type[P], data: Mapping[str, Iterable[str]], classes: Optional[Sequence[str]] = None) -> P:
        return cls(data, classes=classes)


class UserPartition(ClassPartition):
    """The U_c family: polarized users per class"""

    __slots__ = ()
    item_name = "user"


class HashtagPartition(ClassPartition):
    """The H_c family: discriminating hashtags per class"""

    __slots__ = ()
    item_name = "hashtag"

    @classmethod
    def from_seeds(cls, config) -> "HashtagPartition":
        """H^0: every class holds its seed hashtags"""
        return cls({c: config.seeds_of(c) for c in config.classes}, classes=config.classes)
