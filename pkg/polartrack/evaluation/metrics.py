"""
Precision, recall and F-measure against the golden set, plus user coverage.

For class c, with U_c the classified users and Z_c the golden users:

    P_c = |U_c & Z_c| / |U_c & Z|      R_c = |U_c & Z_c| / |Z_c|

Users outside Z never enter these figures. Coverage is reported as
gamma = |U & Z| / |Z| and big_gamma = |U| / |all users|.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, Mapping, NamedTuple, Optional

import numpy as np
from sklearn.metrics import precision_recall_fscore_support

from polartrack.core.partition import ClassPartition

if TYPE_CHECKING:
    from polartrack.evaluation.golden import GoldenSet


class ClassMetrics(NamedTuple):
    precision: float
    recall: float
    f_measure: float


def f_measure(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0"""
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class EvalReport:
    """Per-class P/R/F, their macro averages and coverage"""

    per_class: Dict[str, ClassMetrics]
    macro_precision: float
    macro_recall: float
    macro_f: float
    gamma: float
    big_gamma: float
    golden_size: int = 0
    classified: int = 0
    total_users: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "per_class": {
                cls: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f_measure": m.f_measure,
                }
                for cls, m in self.per_class.items()
            },
            "macro_precision": self.macro_precision,
            "macro_recall": self.macro_recall,
            "macro_f": self.macro_f,
            "gamma": self.gamma,
            "big_gamma": self.big_gamma,
            "golden_size": self.golden_size,
            "classified": self.classified,
            "total_users": self.total_users,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "EvalReport":
        return cls(
            per_class={
                name: ClassMetrics(
                    float(values["precision"]),
                    float(values["recall"]),
                    float(values["f_measure"]),
                )
                for name, values in data["per_class"].items()
            },
            macro_precision=float(data["macro_precision"]),
            macro_recall=float(data["macro_recall"]),
            macro_f=float(data["macro_f"]),
            gamma=float(data["gamma"]),
            big_gamma=float(data["big_gamma"]),
            golden_size=int(data.get("golden_size", 0)),
            classified=int(data.get("classified", 0)),
            total_users=int(data.get("total_users", 0)),
        )


def _unassigned_label(classes) -> str:
    label = "<unassigned>"
    while label in classes:
        label = f"_{label}"
    return label


def evaluate(users: ClassPartition, golden: "GoldenSet", total_users: int) -> EvalReport:
    """
    Score a user partition against the golden set.

    Args:
        users: The U_c family to evaluate
        golden: Z_c per class
        total_users: |U| of the evaluated corpus, the big_gamma denominator

    Returns:
        EvalReport: All metrics at full precision
    """
    classes = list(golden.classes)
    golden_users = sorted(golden.golden_users())
    classified = users.assigned()
    big_gamma = len(classified) / total_users if total_users else 0.0

    if not golden_users:
        zero = ClassMetrics(0.0, 0.0, 0.0)
        return EvalReport(
            per_class={cls: zero for cls in classes},
            macro_precision=0.0,
            macro_recall=0.0,
            macro_f=0.0,
            gamma=0.0,
            big_gamma=big_gamma,
            golden_size=0,
            classified=len(classified),
            total_users=total_users,
        )

    unassigned = _unassigned_label(classes)
    y_true = [golden.owner(user) for user in golden_users]
    y_pred = []
    for user in golden_users:
        predicted = users.owner(user)
        y_pred.append(unassigned if predicted is None else predicted)
    precision, recall, fscore, _ = precision_recall_fscore_support(
        y_true, y_pred, labels=classes, average=None, zero_division=0
    )

    per_class = {
        cls: ClassMetrics(float(p), float(r), float(f))
        for cls, p, r, f in zip(classes, precision, recall, fscore)
    }
    hits = sum(1 for user in golden_users if user in classified)
    return EvalReport(
        per_class=per_class,
        macro_precision=float(np.mean(precision)),
        macro_recall=float(np.mean(recall)),
        macro_f=float(np.mean(fscore)),
        gamma=hits / len(golden_users),
        big_gamma=big_gamma,
        golden_size=len(golden_users),
        classified=len(classified),
        total_users=total_users,
    )


def improvement(report: EvalReport, baseline: EvalReport) -> Optional[float]:
    """Relative macro-F change over a baseline; None when the baseline scores 0"""
    if baseline.macro_f == 0:
        return None
    return (report.macro_f - baseline.macro_f) / baseline.macro_f
