"""
Data model for bodies of evidence

Subsets of a frame are bitmasks: element i of the frame is bit i.
All models are frozen, so bodies can be shared freely between threads.
"""

import math
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.config import settings

MAX_FRAME_SIZE = 64
IDENTITY_TOLERANCE = 1e-12

PAIR_SEPARATOR = "|"


class Frame(BaseModel):
    """Finite universal set with ordered, labelled elements"""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...]
    factors: Optional[Tuple["Frame", "Frame"]] = None

    @field_validator("labels")
    @classmethod
    def validate_labels(cls, v):
        if not v:
            raise ValueError("a frame needs at least one element")
        if len(v) > MAX_FRAME_SIZE:
            raise ValueError(f"a frame holds at most {MAX_FRAME_SIZE} elements")
        if any(not label for label in v):
            raise ValueError("element labels must be nonempty")
        if len(set(v)) != len(v):
            raise ValueError("element labels must be unique")
        return v

    @model_validator(mode="after")
    def validate_factors(self):
        if self.factors is not None:
            x, y = self.factors
            expected = tuple(pair_label(a, b) for a in x.labels for b in y.labels)
            if self.labels != expected:
                raise ValueError("product frame labels must enumerate the factor pairs in order")
        return self

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_bits(self) -> int:
        return (1 << self.size) - 1

    @property
    def is_product(self) -> bool:
        return self.factors is not None

    def index(self, label: str) -> Optional[int]:
        try:
            return self.labels.index(label)
        except ValueError:
            return None

    def labels_of(self, bits: int) -> Tuple[str, ...]:
        return tuple(label for i, label in enumerate(self.labels) if bits >> i & 1)


Frame.model_rebuild()


def pair_label(x_label: str, y_label: str) -> str:
    return f"{x_label}{PAIR_SEPARATOR}{y_label}"


class FocalSet(BaseModel):
    """Nonempty subset of a frame"""

    model_config = ConfigDict(frozen=True)

    bits: int = Field(gt=0)

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def is_singleton(self) -> bool:
        return self.cardinality == 1

    def labels(self, frame: Frame) -> Tuple[str, ...]:
        return frame.labels_of(self.bits)


class Assignment(BaseModel):
    model_config = ConfigDict(frozen=True)

    focal_set: FocalSet
    mass: float


class BodyOfEvidence(BaseModel):
    """The pair (F, m): distinct focal sets with positive masses summing to 1.

    Assignments are kept sorted by bitmask value. Build bodies through
    ``evidence.validation.validate_body``; the checks here only guard the
    invariants.
    """

    model_config = ConfigDict(frozen=True)

    frame: Frame
    assignments: Tuple[Assignment, ...]

    @model_validator(mode="after")
    def validate_invariants(self):
        if not self.assignments:
            raise ValueError("a body needs at least one focal set")
        previous = 0
        for assignment in self.assignments:
            bits = assignment.focal_set.bits
            if bits <= previous:
                raise ValueError("focal sets must be distinct and sorted by bitmask")
            if bits > self.frame.full_bits:
                raise ValueError("focal set uses positions outside the frame")
            if not 0 < assignment.mass <= 1 + settings.normalization_tolerance:
                raise ValueError(f"mass {assignment.mass} outside (0, 1]")
            previous = bits
        total = math.fsum(a.mass for a in self.assignments)
        if abs(total - 1.0) > settings.normalization_tolerance:
            raise ValueError(f"masses sum to {total}, not 1")
        return self

    @property
    def focal_sets(self) -> Tuple[FocalSet, ...]:
        return tuple(a.focal_set for a in self.assignments)

    @property
    def masses(self) -> Tuple[float, ...]:
        return tuple(a.mass for a in self.assignments)

    def entries(self) -> List[Tuple[int, int, float]]:
        """(bits, cardinality, mass) triples in canonical order"""
        return [(a.focal_set.bits, a.focal_set.cardinality, a.mass) for a in self.assignments]

    def mass_of(self, focal_set: FocalSet) -> float:
        for assignment in self.assignments:
            if assignment.focal_set.bits == focal_set.bits:
                return assignment.mass
        return 0.0

    @property
    def is_bayesian(self) -> bool:
        return all(a.focal_set.is_singleton for a in self.assignments)

    @property
    def is_consonant(self) -> bool:
        chain = sorted((a.focal_set for a in self.assignments), key=lambda f: f.cardinality)
        return all(inner.bits & ~outer.bits == 0 for inner, outer in zip(chain, chain[1:]))


class MeasureReport(BaseModel):
    """All measures of one body, in bits"""

    model_config = ConfigDict(frozen=True)

    nonspecificity: float
    discord: float
    strife: float
    k_term: float
    total_T: float
    total_NS: float
    is_bayesian: bool
    shannon: Optional[float] = None

    @model_validator(mode="after")
    def validate_identities(self):
        if abs(self.strife - (self.nonspecificity - self.k_term)) > IDENTITY_TOLERANCE:
            raise ValueError("strife must equal nonspecificity - k_term")
        if abs(self.total_NS - (self.nonspecificity + self.strife)) > IDENTITY_TOLERANCE:
            raise ValueError("total_NS must equal nonspecificity + strife")
        if abs(self.total_T - (self.nonspecificity + self.discord)) > IDENTITY_TOLERANCE:
            raise ValueError("total_T must equal nonspecificity + discord")
        for name in ("nonspecificity", "discord", "strife", "total_T", "total_NS"):
            if getattr(self, name) < -IDENTITY_TOLERANCE:
                raise ValueError(f"{name} must be nonnegative")
        if self.is_bayesian != (self.shannon is not None):
            raise ValueError("shannon is present exactly for Bayesian bodies")
        return self
