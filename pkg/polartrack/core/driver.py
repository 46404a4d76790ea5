"""
PTR and TPTR loops.

PTR alternates user and hashtag classification over the whole corpus until
nothing changes between two iterations. TPTR runs one such iteration per day
on that day's tweets only, carrying the user labels and hashtag sets forward.
"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, FrozenSet, List, Optional, Tuple

from polartrack.core.classify import users_class
from polartrack.core.config import ClassConfig
from polartrack.core.corpus import Corpus
from polartrack.core.partition import HashtagPartition, UserPartition
from polartrack.core.topics import HashtagScore, assign_hashtags, score_candidates
from polartrack.evaluation.metrics import EvalReport, evaluate
from polartrack.utils.logger import get_logger

if TYPE_CHECKING:
    from polartrack.evaluation.golden import GoldenSet

logger = get_logger(__name__)


@dataclass(frozen=True)
class IterationTrace:
    """State after one iteration (PTR) or one day (TPTR)"""

    iteration: int
    hashtags: HashtagPartition
    users: UserPartition
    eval: Optional[EvalReport] = None
    day: Optional[int] = None
    new_hashtags: Dict[str, FrozenSet[str]] = field(default_factory=dict)
    scores: Tuple[HashtagScore, ...] = ()
    hashtags_converged: bool = False
    converged: bool = False


def _step(
    corpus: Corpus,
    config: ClassConfig,
    seeds: HashtagPartition,
    hashtags: HashtagPartition,
    users: UserPartition,
    universe,
    threads: Optional[int],
) -> Tuple[UserPartition, HashtagPartition, List[HashtagScore]]:
    new_users = users_class(
        corpus, hashtags, users, config.alpha, universe=universe, threads=threads
    )
    scores = score_candidates(corpus, new_users, seeds, config.top_k, threads)
    new_hashtags = assign_hashtags(scores, seeds, config.beta)
    return new_users, new_hashtags, scores


def _discovered(current: HashtagPartition, previous: HashtagPartition) -> Dict[str, FrozenSet[str]]:
    return {cls: current[cls] - previous[cls] for cls in current.classes}


def _log_trace(trace: IterationTrace, label: str) -> None:
    logger.info(
        "%s: users %s, hashtags %s, new %s",
        label,
        trace.users.sizes(),
        trace.hashtags.sizes(),
        {cls: sorted(hs) for cls, hs in trace.new_hashtags.items() if hs},
    )
    if trace.eval is not None:
        logger.info(
            "%s: macro-F %.3f, gamma %.3f, Gamma %.3f",
            label,
            trace.eval.macro_f,
            trace.eval.gamma,
            trace.eval.big_gamma,
        )


def run_ptr(
    corpus: Corpus,
    config: ClassConfig,
    golden: Optional["GoldenSet"] = None,
    threads: Optional[int] = None,
) -> List[IterationTrace]:
    """
    Run the batch PTR loop.

    Iteration t classifies users from H^(t-1) with U^(t-1) as backup, then
    classifies hashtags from U^t. H^0 holds the seeds and U^0 is empty. The
    loop stops once both H and U equal their previous values, or after
    config.max_iterations.

    hashtags_converged on a trace is the plain stopping rule on H alone.
    Once H is stable the user step sees the same hashtags again, so U
    settles within one more iteration.

    Args:
        corpus: Corpus already stripped of golden hashtags
        config: Class configuration
        golden: Optional golden set; every iteration is evaluated against it
        threads: Worker count for the classification steps

    Returns:
        list: One IterationTrace per completed iteration
    """
    seeds = HashtagPartition.from_seeds(config)
    hashtags = seeds
    users = UserPartition.empty(config.classes)
    total_users = len(corpus.users)
    traces: List[IterationTrace] = []

    for iteration in range(1, config.max_iterations + 1):
        new_users, new_hashtags, scores = _step(
            corpus, config, seeds, hashtags, users, None, threads
        )
        hashtags_converged = new_hashtags == hashtags
        converged = hashtags_converged and new_users == users
        trace = IterationTrace(
            iteration=iteration,
            hashtags=new_hashtags,
            users=new_users,
            eval=evaluate(new_users, golden, total_users) if golden is not None else None,
            new_hashtags=_discovered(new_hashtags, hashtags),
            scores=tuple(scores),
            hashtags_converged=hashtags_converged,
            converged=converged,
        )
        traces.append(trace)
        _log_trace(trace, f"Iteration {iteration}")
        if converged:
            logger.info("Converged after %d iteration(s)", iteration)
            break
        hashtags, users = new_hashtags, new_users
    else:
        logger.warning(
            "No convergence within max_iterations=%d", config.max_iterations
        )

    return traces


def run_tptr(
    corpus: Corpus,
    config: ClassConfig,
    golden: Optional["GoldenSet"] = None,
    threads: Optional[int] = None,
) -> List[IterationTrace]:
    """
    Run the temporal TPTR loop, one iteration per day present in the corpus.

    Every corpus user is tested each day against that day's tweets; users
    with no decisive tweets that day keep their label. Each day's hashtag sets
    feed the next day. Evaluation uses the full golden set and all corpus
    users every day.

    Returns:
        list: One IterationTrace per day, in ascending day order
    """
    seeds = HashtagPartition.from_seeds(config)
    hashtags = seeds
    users = UserPartition.empty(config.classes)
    universe = corpus.users
    total_users = len(universe)
    traces: List[IterationTrace] = []

    for iteration, day in enumerate(corpus.days, start=1):
        day_corpus = corpus.day_slice(day)
        new_users, new_hashtags, scores = _step(
            day_corpus, config, seeds, hashtags, users, universe, threads
        )
        hashtags_converged = new_hashtags == hashtags
        trace = IterationTrace(
            iteration=iteration,
            hashtags=new_hashtags,
            users=new_users,
            eval=evaluate(new_users, golden, total_users) if golden is not None else None,
            day=day,
            new_hashtags=_discovered(new_hashtags, hashtags),
            scores=tuple(scores),
            hashtags_converged=hashtags_converged,
            converged=hashtags_converged and new_users == users,
        )
        traces.append(trace)
        _log_trace(trace, f"Day {day}")
        hashtags, users = new_hashtags, new_users

    return traces
