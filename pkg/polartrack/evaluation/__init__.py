from polartrack.evaluation.golden import (
    DominanceGoldenStrategy,
    ExclusiveGoldenStrategy,
    GoldenSet,
    GoldenSetStrategy,
    GoldenStrategyFactory,
    GoldenSummary,
    build_golden,
    golden_summary,
)
from polartrack.evaluation.metrics import (
    ClassMetrics,
    EvalReport,
    evaluate,
    f_measure,
    improvement,
)

__all__ = [
    "ClassMetrics",
    "DominanceGoldenStrategy",
    "EvalReport",
    "ExclusiveGoldenStrategy",
    "GoldenSet",
    "GoldenSetStrategy",
    "GoldenStrategyFactory",
    "GoldenSummary",
    "build_golden",
    "evaluate",
    "f_measure",
    "golden_summary",
    "improvement",
]
