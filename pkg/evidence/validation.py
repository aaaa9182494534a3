"""
Construction and validation of frames and bodies of evidence
"""

import logging
import math
from collections import defaultdict
from numbers import Integral
from typing import Dict, Iterable, Sequence, Tuple, Union

from pydantic import ValidationError

from app.config import settings
from app.monitoring import event
from core.errors import (
    EmptyFocalSet,
    FrameTooLarge,
    InvalidFrame,
    MassOutOfRange,
    NotNormalized,
    UnknownElement,
)
from evidence.models import (
    MAX_FRAME_SIZE,
    Assignment,
    BodyOfEvidence,
    FocalSet,
    Frame,
    pair_label,
)

logger = logging.getLogger(__name__)

Subset = Union[int, FocalSet, str, Iterable[str]]


def make_frame(labels: Sequence[str]) -> Frame:
    """Build a frame, raising domain errors instead of pydantic ones"""
    labels = tuple(labels)
    if len(labels) > MAX_FRAME_SIZE:
        raise FrameTooLarge(
            f"frame has {len(labels)} elements, the limit is {MAX_FRAME_SIZE}",
            {"size": len(labels)},
        )
    try:
        return Frame(labels=labels)
    except ValidationError as e:
        raise InvalidFrame(e.errors()[0]["msg"], {"labels": list(labels)}) from e


def product_frame(x: Frame, y: Frame) -> Frame:
    """Frame X x Y with pair labels "x|y"; pair (i, j) sits at bit i * |Y| + j"""
    size = x.size * y.size
    if size > MAX_FRAME_SIZE:
        raise FrameTooLarge(
            f"product of {x.size} x {y.size} elements exceeds {MAX_FRAME_SIZE}",
            {"x_size": x.size, "y_size": y.size},
        )
    labels = tuple(pair_label(a, b) for a in x.labels for b in y.labels)
    try:
        return Frame(labels=labels, factors=(x, y))
    except ValidationError as e:
        raise InvalidFrame(e.errors()[0]["msg"], {"labels": list(labels)}) from e


def subset_bits(frame: Frame, subset: Subset) -> int:
    """Bitmask of a subset given as a mask, a FocalSet, one label or an iterable of labels"""
    if isinstance(subset, FocalSet):
        bits = subset.bits
    elif isinstance(subset, Integral):
        bits = int(subset)
    else:
        if isinstance(subset, str):
            subset = (subset,)
        bits = 0
        for label in subset:
            index = frame.index(label)
            if index is None:
                raise UnknownElement(f"element {label!r} is not in the frame", {"element": label})
            bits |= 1 << index
    if bits < 0 or bits > frame.full_bits:
        raise UnknownElement("subset uses positions outside the frame", {"bits": bits})
    return bits


def validate_body(
    frame: Frame,
    entries: Iterable[Tuple[Subset, float]],
    renormalize: bool = False,
) -> BodyOfEvidence:
    """Normalize raw (subset, mass) pairs into a body of evidence.

    Entries below the mass floor are dropped, duplicate subsets merged by
    summing, and the result sorted by bitmask. Masses must sum to 1 within
    the normalization tolerance unless ``renormalize`` is requested.
    """
    merged: Dict[int, float] = defaultdict(float)
    for position, (subset, mass) in enumerate(entries):
        bits = subset_bits(frame, subset)
        if bits == 0:
            raise EmptyFocalSet("mass assigned to the empty set", {"entry": position})
        mass = float(mass)
        if not math.isfinite(mass) or mass < 0:
            raise MassOutOfRange(f"mass {mass} is not a nonnegative number", {"entry": position})
        if mass < settings.mass_floor:
            continue
        merged[bits] += mass

    total = math.fsum(merged.values())
    if total <= 0:
        raise NotNormalized("no focal set carries positive mass", {"sum": total})

    for bits, mass in merged.items():
        if not renormalize and mass > 1 + settings.normalization_tolerance:
            raise MassOutOfRange(
                f"merged mass {mass!r} exceeds 1",
                {"set": list(frame.labels_of(bits))},
            )

    if abs(total - 1.0) > settings.normalization_tolerance:
        if not renormalize:
            raise NotNormalized(f"masses sum to {total!r}", {"sum": total})
        logger.info(event("renormalized", sum=total, focal_sets=len(merged)))
        merged = {bits: mass / total for bits, mass in merged.items()}

    assignments = tuple(
        Assignment(focal_set=FocalSet(bits=bits), mass=merged[bits]) for bits in sorted(merged)
    )
    return BodyOfEvidence(frame=frame, assignments=assignments)


def certainty_body(frame: Frame, label: str) -> BodyOfEvidence:
    """m({x}) = 1"""
    return validate_body(frame, [(label, 1.0)])


def vacuous_body(frame: Frame) -> BodyOfEvidence:
    """m(X) = 1"""
    return validate_body(frame, [(frame.full_bits, 1.0)])


def uniform_bayesian_body(frame: Frame) -> BodyOfEvidence:
    """m({x}) = 1/|X| for every x"""
    return validate_body(frame, [(1 << i, 1.0 / frame.size) for i in range(frame.size)])
