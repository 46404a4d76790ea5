from typing import Any, Dict

from polartrack.core.driver import IterationTrace


def trace_record(trace: IterationTrace) -> Dict[str, Any]:
    """Machine-readable summary of one iteration, at full precision"""
    classes = trace.users.classes
    return {
        "iteration": trace.iteration,
        "day": trace.day,
        "users": trace.users.sizes(),
        "hashtags": {cls: len(trace.hashtags[cls]) for cls in classes},
        "new_hashtags": {
            cls: sorted(trace.new_hashtags.get(cls, ())) for cls in classes
        },
        "hashtags_converged": trace.hashtags_converged,
        "converged": trace.converged,
        "eval": trace.eval.to_dict() if trace.eval is not None else None,
    }
