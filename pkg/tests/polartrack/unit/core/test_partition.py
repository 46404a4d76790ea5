"""
Unit tests for ClassPartition and its subclasses in partition.py
"""
import pytest

from polartrack.core.partition import ClassPartition, HashtagPartition, UserPartition


def test_partition_basics():
    partition = UserPartition({"a": ["u1", "u2"], "b": ["u3"]}, classes=("a", "b", "c"))
    assert partition.classes == ("a", "b", "c")
    assert partition["a"] == {"u1", "u2"}
    assert partition["c"] == frozenset()
    assert partition.owner("u3") == "b"
    assert partition.owner("u9") is None
    assert "u1" in partition
    assert "u9" not in partition
    assert partition.assigned() == {"u1", "u2", "u3"}
    assert partition.sizes() == {"a": 2, "b": 1, "c": 0}
    assert list(partition) == ["a", "b", "c"]


def test_partition_rejects_overlap():
    with pytest.raises(ValueError) as excinfo:
        UserPartition({"a": ["u1"], "b": ["u1"]})
    assert "user 'u1'" in str(excinfo.value)


def test_partition_rejects_unknown_class():
    with pytest.raises(ValueError):
        HashtagPartition({"z": ["x"]}, classes=("a", "b"))


def test_partition_equality():
    left = UserPartition({"a": ["u1"], "b": []})
    right = UserPartition({"b": [], "a": ["u1"]}, classes=("a", "b"))
    assert left == right
    assert hash(left) == hash(right)
    assert left != UserPartition({"a": [], "b": ["u1"]})


def test_empty_and_dict_round_trip():
    empty = HashtagPartition.empty(("a", "b"))
    assert empty.assigned() == frozenset()
    partition = UserPartition({"a": ["u2", "u1"], "b": ["u3"]})
    assert partition.to_dict() == {"a": ["u1", "u2"], "b": ["u3"]}
    assert UserPartition.from_dict(partition.to_dict()) == partition


def test_from_seeds(two_class_config):
    seeds = HashtagPartition.from_seeds(two_class_config)
    assert seeds.classes == ("a", "b")
    assert seeds["a"] == {"a1"}
    assert seeds["b"] == {"b1"}


def test_base_class_is_usable():
    assert ClassPartition({"a": ["x"]}).owner("x") == "a"
