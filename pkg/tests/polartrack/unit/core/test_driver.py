"""
Unit tests for the PTR and TPTR loops in driver.py
"""
from polartrack.core.driver import run_ptr, run_tptr
from polartrack.core.partition import HashtagPartition
from polartrack.evaluation.golden import GoldenSet

DISCOVERY_ROWS = [
    ("u-1", "u", 0, {"a1", "x"}),
    ("u-2", "u", 0, {"x"}),
    ("v-1", "v", 0, {"b1"}),
    ("w-1", "w", 0, {"x"}),
]


def test_fixed_point_converges_at_second_iteration(build_corpus, two_class_config):
    corpus = build_corpus([("t1", "u", 0, {"a1"}), ("t2", "v", 0, {"b1"})])
    traces = run_ptr(corpus, two_class_config)
    seeds = HashtagPartition.from_seeds(two_class_config)
    assert len(traces) == 2
    assert traces[0].hashtags == seeds
    assert traces[1].hashtags == seeds
    assert traces[0].hashtags_converged
    assert not traces[0].converged
    assert traces[1].converged
    assert traces[1].users.to_dict() == {"a": ["u"], "b": ["v"]}


def test_empty_corpus_converges_immediately(build_corpus, two_class_config):
    traces = run_ptr(build_corpus([]), two_class_config)
    assert len(traces) == 1
    assert traces[0].converged
    assert traces[0].users.assigned() == frozenset()
    assert traces[0].hashtags == HashtagPartition.from_seeds(two_class_config)
    assert traces[0].scores == ()


def test_discovered_hashtag_spreads_to_users(build_corpus, two_class_config):
    traces = run_ptr(build_corpus(DISCOVERY_ROWS), two_class_config)
    assert [t.iteration for t in traces] == [1, 2, 3]
    assert traces[0].new_hashtags == {"a": {"x"}, "b": frozenset()}
    assert traces[0].users["a"] == {"u"}
    assert traces[1].users["a"] == {"u", "w"}
    assert traces[1].new_hashtags == {"a": frozenset(), "b": frozenset()}
    assert traces[-1].converged
    assert traces[0].day is None
    assert [s.hashtag for s in traces[0].scores] == ["x"]


def test_max_iterations_stops_loop(build_corpus, two_class_config, project_caplog):
    config = two_class_config.with_overrides(max_iterations=1)
    traces = run_ptr(build_corpus(DISCOVERY_ROWS), config)
    assert len(traces) == 1
    assert not traces[0].converged
    assert "No convergence within max_iterations=1" in project_caplog.text


def test_ptr_evaluates_each_iteration(build_corpus, two_class_config):
    golden = GoldenSet({"a": {"u", "w"}, "b": {"v"}})
    traces = run_ptr(build_corpus(DISCOVERY_ROWS), two_class_config, golden=golden)
    assert traces[0].eval.gamma == 2 / 3
    assert traces[-1].eval.gamma == 1.0
    assert traces[-1].eval.macro_f == 1.0
    assert traces[-1].eval.big_gamma == 1.0


def test_tptr_single_day_equals_first_ptr_iteration(build_corpus, two_class_config):
    corpus = build_corpus(DISCOVERY_ROWS)
    first = run_ptr(corpus, two_class_config)[0]
    traces = run_tptr(corpus, two_class_config)
    assert len(traces) == 1
    assert traces[0].day == 0
    assert traces[0].users == first.users
    assert traces[0].hashtags == first.hashtags


def test_tptr_keeps_silent_users(build_corpus, two_class_config):
    corpus = build_corpus([
        ("t1", "u", 0, {"a1"}),
        ("t2", "v", 1, {"b1"}),
    ])
    traces = run_tptr(corpus, two_class_config)
    assert [t.day for t in traces] == [0, 1]
    assert traces[0].users.owner("u") == "a"
    assert traces[1].users.owner("u") == "a"
    assert traces[1].users.owner("v") == "b"


def test_tptr_iterates_present_days_only(build_corpus, two_class_config):
    corpus = build_corpus([
        ("t1", "u", 2, {"a1"}),
        ("t2", "v", 7, {"b1"}),
    ])
    traces = run_tptr(corpus, two_class_config)
    assert [(t.iteration, t.day) for t in traces] == [(1, 2), (2, 7)]


def test_tptr_carries_hashtags_forward(build_corpus, two_class_config):
    corpus = build_corpus([
        ("u-1", "u", 0, {"a1", "x"}),
        ("v-1", "v", 0, {"b1"}),
        ("w-1", "w", 1, {"x"}),
    ])
    traces = run_tptr(corpus, two_class_config)
    assert "x" in traces[0].hashtags["a"]
    assert traces[1].users.owner("w") == "a"


def test_tptr_empty_corpus(build_corpus, two_class_config):
    assert run_tptr(build_corpus([]), two_class_config) == []


def test_user_stability_follows_hashtag_stability_within_one_iteration(build_corpus, two_class_config):
    for rows in (DISCOVERY_ROWS, [("t1", "u", 0, {"a1"}), ("t2", "v", 0, {"b1"})]):
        traces = run_ptr(build_corpus(rows), two_class_config)
        first_stable = next(t.iteration for t in traces if t.hashtags_converged)
        assert traces[-1].converged
        assert traces[-1].iteration - first_stable <= 1
