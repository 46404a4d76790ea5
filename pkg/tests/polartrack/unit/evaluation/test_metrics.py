"""
Unit tests for precision, recall, F-measure and coverage in metrics.py
"""
import pytest

from polartrack.core.partition import UserPartition
from polartrack.evaluation.golden import GoldenSet
from polartrack.evaluation.metrics import EvalReport, evaluate, f_measure, improvement

GOLDEN = GoldenSet({"A": {"z1", "z2"}, "B": {"z3", "z4"}})


@pytest.mark.parametrize(
    "precision, recall, expected",
    [
        (0.144, 0.257, 0.185),
        (0.350, 0.752, 0.478),
        (0.995, 0.916, 0.954),
    ],
)
def test_f_measure_matches_published_pairs(precision, recall, expected):
    assert abs(f_measure(precision, recall) - expected) <= 0.0005


def test_f_measure_zero():
    assert f_measure(0.0, 0.0) == 0.0


def test_perfect_classification():
    users = UserPartition({"A": {"z1", "z2"}, "B": {"z3", "z4"}})
    report = evaluate(users, GOLDEN, 4)
    for metrics in report.per_class.values():
        assert metrics == (1.0, 1.0, 1.0)
    assert report.macro_f == 1.0
    assert report.gamma == 1.0
    assert report.big_gamma == 1.0
    assert report.golden_size == 4


def test_partial_classification():
    # A holds z1 (right) and z3 (wrong); z2, z4 unclassified; B holds extra non-golden users
    users = UserPartition({"A": {"z1", "z3"}, "B": {"x1", "x2"}})
    report = evaluate(users, GOLDEN, 10)
    assert report.per_class["A"].precision == 0.5
    assert report.per_class["A"].recall == 0.5
    assert report.per_class["A"].f_measure == 0.5
    assert report.per_class["B"] == (0.0, 0.0, 0.0)
    assert report.macro_precision == 0.25
    assert report.macro_recall == 0.25
    assert report.macro_f == 0.25
    assert report.gamma == 0.5
    assert report.big_gamma == 0.4
    assert report.classified == 4


def test_non_golden_users_do_not_affect_precision():
    users = UserPartition({"A": {"z1", "z2", "x1", "x2", "x3"}, "B": {"z3", "z4"}})
    assert evaluate(users, GOLDEN, 7).macro_f == 1.0


def test_empty_golden_set():
    users = UserPartition({"A": {"u"}, "B": set()})
    report = evaluate(users, GoldenSet.empty(("A", "B")), 2)
    assert report.macro_f == 0.0
    assert report.gamma == 0.0
    assert report.big_gamma == 0.5
    assert report.golden_size == 0


def test_class_named_like_unassigned_marker():
    golden = GoldenSet({"<unassigned>": {"z1"}, "B": {"z2"}})
    users = UserPartition({"<unassigned>": set(), "B": {"z2"}})
    report = evaluate(users, golden, 2)
    assert report.per_class["<unassigned>"] == (0.0, 0.0, 0.0)
    assert report.per_class["B"] == (1.0, 1.0, 1.0)


def test_report_dict_round_trip():
    users = UserPartition({"A": {"z1", "z3"}, "B": {"z4"}})
    report = evaluate(users, GOLDEN, 5)
    assert EvalReport.from_dict(report.to_dict()) == report


def test_improvement():
    users = UserPartition({"A": {"z1", "z2"}, "B": {"z3", "z4"}})
    report = evaluate(users, GOLDEN, 4)
    weak = evaluate(UserPartition({"A": {"z1", "z3"}, "B": set()}), GOLDEN, 4)
    assert improvement(report, weak) == pytest.approx((1.0 - weak.macro_f) / weak.macro_f)
    zero = evaluate(UserPartition.empty(("A", "B")), GOLDEN, 4)
    assert improvement(report, zero) is None
