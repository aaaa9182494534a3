"""
Randomised search for subadditivity violations.

Random joints are drawn directly on the product frame: products of
marginals are exactly the additive cases, so they can never violate.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from app.config import settings
from app.monitoring import event
from core.errors import EvidenceError, SizeMismatch, SizeOutOfRange
from evidence.joins import FIRST_AXIS, SECOND_AXIS, marginalize
from evidence.measures import discord, nonspecificity, strife, total_NS, total_T
from evidence.models import BodyOfEvidence
from evidence.validation import make_frame, product_frame, validate_body
from explorer.sampling import factor_frames, random_joint

logger = logging.getLogger(__name__)

Measure = Literal["N", "D", "S", "T", "NS"]

MEASURES: Dict[str, Callable[[BodyOfEvidence], float]] = {
    "N": nonspecificity,
    "D": discord,
    "S": strife,
    "T": total_T,
    "NS": total_NS,
}

CANONICAL_TRIAL = 0


class ViolationRecord(BaseModel):
    """A joint whose measure exceeds the sum over its marginals"""

    model_config = ConfigDict(frozen=True)

    joint: BodyOfEvidence
    measure: Measure
    joint_value: float
    marginal_sum: float
    violation: float
    relative_violation: float
    seed: int
    trial: int
    max_focal: int


def canonical_counterexample() -> BodyOfEvidence:
    """m(X x Y) = 0.5, m({(a, alpha), (b, beta)}) = 0.5 on X = {a, b}, Y = {alpha, beta}"""
    frame = product_frame(make_frame(["a", "b"]), make_frame(["alpha", "beta"]))
    return validate_body(frame, [
        (frame.full_bits, 0.5),
        (["a|alpha", "b|beta"], 0.5),
    ])


def _uses_canonical(x_size: int, y_size: int, measure: str) -> bool:
    return measure == "S" and (x_size, y_size) == (2, 2)


def reproduce_trial(x_size: int, y_size: int, seed: int, trial: int,
                    max_focal: Optional[int] = None) -> BodyOfEvidence:
    """The joint examined by a given (seed, trial) pair under a focal-set cap"""
    if trial == CANONICAL_TRIAL:
        if (x_size, y_size) != (2, 2):
            raise SizeMismatch("trial 0 is the 2x2 canonical counterexample", {"x_size": x_size, "y_size": y_size})
        return canonical_counterexample()
    return random_joint(x_size, y_size, seed, trial, max_focal)


def check_violation(joint: BodyOfEvidence, measure: str, seed: int, trial: int,
                    max_focal: Optional[int] = None) -> Optional[ViolationRecord]:
    """Record the joint when measure(joint) > measure(m_x) + measure(m_y) + threshold"""
    compute = MEASURES[measure]
    joint_value = compute(joint)
    marginal_sum = compute(marginalize(joint, FIRST_AXIS)) + compute(marginalize(joint, SECOND_AXIS))
    violation = joint_value - marginal_sum
    if violation <= settings.violation_threshold:
        return None
    return ViolationRecord(
        joint=joint,
        measure=measure,
        joint_value=joint_value,
        marginal_sum=marginal_sum,
        violation=violation,
        relative_violation=violation / max(joint_value, settings.relative_epsilon),
        seed=seed,
        trial=trial,
        max_focal=settings.search_max_focal if max_focal is None else max_focal,
    )


def search_subadditivity_violations(
    x_size: int,
    y_size: int,
    trials: int,
    seed: int,
    measure: Measure = "S",
    workers: Optional[int] = None,
    max_focal: Optional[int] = None,
) -> List[ViolationRecord]:
    """Violations over random joints, largest first (ties by trial index)"""
    factor_frames(x_size, y_size)
    if trials < 1:
        raise SizeOutOfRange("trials must be at least 1", {"trials": trials})
    if measure not in MEASURES:
        raise EvidenceError(f"unknown measure {measure!r}", {"measure": measure})
    workers = settings.search_workers if workers is None else workers
    max_focal = settings.search_max_focal if max_focal is None else max_focal
    if max_focal < 1:
        raise SizeOutOfRange("max_focal must be at least 1", {"max_focal": max_focal})

    trial_ids = list(range(1, trials + 1))
    if _uses_canonical(x_size, y_size, measure):
        trial_ids.insert(0, CANONICAL_TRIAL)

    def run_trial(trial: int) -> Optional[ViolationRecord]:
        joint = reproduce_trial(x_size, y_size, seed, trial, max_focal)
        return check_violation(joint, measure, seed, trial, max_focal)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_trial, trial_ids))
    else:
        outcomes = [run_trial(trial) for trial in trial_ids]

    records = [record for record in outcomes if record is not None]
    records.sort(key=lambda record: (-record.violation, record.trial))

    logger.info(event(
        "search_complete",
        measure=measure,
        x_size=x_size,
        y_size=y_size,
        trials=len(trial_ids),
        seed=seed,
        max_focal=max_focal,
        violations=len(records),
    ))
    if measure == "N" and records:
        logger.error(event("nonspecificity_violation", count=len(records), first_trial=records[0].trial))
    return records


def summarize(records: List[ViolationRecord]) -> Dict[str, Optional[float]]:
    if not records:
        return {"violations": 0, "max_violation": None, "max_relative_violation": None}
    return {
        "violations": len(records),
        "max_violation": records[0].violation,
        "max_relative_violation": max(record.relative_violation for record in records),
    }
