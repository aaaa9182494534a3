"""
Ordered possibility distributions and their nested bodies of evidence
"""

import math
import re
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from core.errors import InvalidDistribution, SizeMismatch
from evidence.models import BodyOfEvidence, Frame
from evidence.validation import make_frame, validate_body


class PossibilityDistribution(BaseModel):
    """1 = r1 >= r2 >= ... >= rn >= 0, with r(n+1) = 0 by convention"""

    model_config = ConfigDict(frozen=True)

    values: Tuple[float, ...]

    @field_validator("values")
    @classmethod
    def validate_values(cls, v):
        if not v:
            raise ValueError("a distribution needs at least one value")
        if any(not math.isfinite(r) for r in v):
            raise ValueError("values must be finite")
        if v[0] != 1.0:
            raise ValueError(f"r1 must be exactly 1, got {v[0]!r}")
        for i, (current, following) in enumerate(zip(v, v[1:]), start=1):
            if following > current:
                raise ValueError(f"values must be nonincreasing (r{i + 1} > r{i})")
        if v[-1] < 0:
            raise ValueError("values must be nonnegative")
        return v

    @property
    def size(self) -> int:
        return len(self.values)

    def masses(self) -> List[float]:
        """m(A_i) = r_i - r_(i+1) for the nested sets A_i = {x1..xi}"""
        padded = self.values + (0.0,)
        return [padded[i] - padded[i + 1] for i in range(self.size)]


def make_distribution(values: Iterable[float]) -> PossibilityDistribution:
    values = tuple(float(r) for r in values)
    try:
        return PossibilityDistribution(values=values)
    except ValidationError as e:
        raise InvalidDistribution(e.errors()[0]["msg"], {"values": list(values)}) from e


def parse_distribution(text: str) -> PossibilityDistribution:
    """Parse whitespace, comma or newline separated decimals"""
    tokens = [token for token in re.split(r"[\s,]+", text.strip()) if token]
    try:
        values = [float(token) for token in tokens]
    except ValueError as e:
        raise InvalidDistribution(str(e), {"input": text.strip()[:80]}) from e
    return make_distribution(values)


def default_frame(n: int) -> Frame:
    """Frame x1..xn in distribution order"""
    return make_frame([f"x{i}" for i in range(1, n + 1)])


def to_consonant_body(dist: PossibilityDistribution, frame: Optional[Frame] = None) -> BodyOfEvidence:
    """Nested body with focal sets {x1..xi} and masses r_i - r_(i+1); zero masses dropped"""
    frame = frame or default_frame(dist.size)
    if frame.size != dist.size:
        raise SizeMismatch(
            f"distribution has {dist.size} values but the frame has {frame.size} elements",
            {"values": dist.size, "frame": frame.size},
        )
    entries = [
        ((1 << (i + 1)) - 1, mass)
        for i, mass in enumerate(dist.masses())
        if mass > 0
    ]
    return validate_body(frame, entries)
