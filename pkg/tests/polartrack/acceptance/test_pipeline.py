"""
End-to-end behaviour on the default synthetic corpus: PTR improves after its
first iteration, settles quickly and beats the k-means baseline; TPTR coverage
only grows day over day.
"""
import pytest

from polartrack.baseline.kmeans import run_baseline
from polartrack.core.corpus import strip_golden
from polartrack.core.driver import run_ptr, run_tptr
from polartrack.evaluation.golden import build_golden
from polartrack.evaluation.metrics import evaluate
from polartrack.reports.writers import MetricsWriter
from polartrack.synth.generator import SynthConfig, generate, synthetic_class_config

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def ptr_traces(synthetic_default):
    data = synthetic_default
    return run_ptr(data["corpus"], data["config"], golden=data["golden"])


def test_golden_set_is_a_small_fraction(synthetic_default):
    golden_users = synthetic_default["golden"].golden_users()
    ratio = len(golden_users) / len(synthetic_default["corpus"].users)
    assert 0.02 <= ratio <= 0.2


def test_golden_set_agrees_with_truth(synthetic_default):
    golden = synthetic_default["golden"]
    truth = synthetic_default["truth"]
    for cls in golden.classes:
        assert golden[cls] <= truth[cls]


def test_second_iteration_improves(ptr_traces):
    assert len(ptr_traces) >= 2
    first, second = ptr_traces[0].eval, ptr_traces[1].eval
    assert second.macro_f > first.macro_f
    assert second.gamma > first.gamma


def test_hashtags_settle_within_five_iterations(ptr_traces):
    assert any(trace.hashtags_converged for trace in ptr_traces[:5])


def test_discovers_class_hashtags(ptr_traces):
    final = ptr_traces[-1].hashtags
    for cls in final.classes:
        own = [h for h in final[cls] if h.startswith(cls)]
        assert len(final[cls]) > 1
        assert len(own) >= 0.9 * len(final[cls])


def test_ptr_beats_kmeans(ptr_traces, synthetic_default):
    data = synthetic_default
    result = run_baseline(data["corpus"], data["config"])
    baseline = evaluate(result.partition, data["golden"], len(data["corpus"].users))
    assert ptr_traces[-1].eval.macro_f > baseline.macro_f


def test_tptr_coverage_never_drops(synthetic_default):
    data = synthetic_default
    traces = run_tptr(data["corpus"], data["config"], golden=data["golden"])
    assert [t.day for t in traces] == list(range(data["synth"].days))
    gammas = [t.eval.gamma for t in traces]
    big_gammas = [t.eval.big_gamma for t in traces]
    assert gammas == sorted(gammas)
    assert big_gammas == sorted(big_gammas)


@pytest.mark.parametrize("threads", [2, 8])
def test_thread_count_does_not_change_output(threads):
    synth = SynthConfig(users_per_class=60, neutral_users=40, days=4)
    raw, _ = generate(synth)
    config = synthetic_class_config(synth)
    golden = build_golden(raw, config)
    corpus = strip_golden(raw, config)
    writer = MetricsWriter("unused")
    single = writer.render(run_ptr(corpus, config, golden=golden, threads=1))
    assert writer.render(run_ptr(corpus, config, golden=golden, threads=threads)) == single
