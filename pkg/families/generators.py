"""
Strongly symmetric focal families and their uniform bodies.

Element j of the modular chain construction is frame position j (0-based),
so the window {x(1+j), .., x(k+j)} (mod n) becomes positions j..j+k-1 mod n.
"""

from collections import Counter
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from core.errors import BadCardinality, BadDivisibility, DuplicateFocalSet, SizeMismatch
from evidence.models import BodyOfEvidence, FocalSet, Frame
from evidence.validation import validate_body


class FamilyKind(str, Enum):
    EQUAL_PARTITION = "equal-partition"
    ALL_K_SUBSETS = "all-k-subsets"
    CHAIN_K = "chain-k"
    PARTITION_ALL_SUBSETS = "partition-all-subsets"
    PARTITION_CHAIN_K = "partition-chain-k"


PARTITION_KINDS = {FamilyKind.EQUAL_PARTITION, FamilyKind.PARTITION_ALL_SUBSETS, FamilyKind.PARTITION_CHAIN_K}
CARDINALITY_KINDS = {FamilyKind.ALL_K_SUBSETS, FamilyKind.CHAIN_K, FamilyKind.PARTITION_ALL_SUBSETS,
                     FamilyKind.PARTITION_CHAIN_K}


class SymmetricFamilySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    n: int = Field(ge=1)
    c: Optional[int] = None
    k: Optional[int] = None


class SymmetryReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    symmetric: bool
    cardinalities: Dict[int, int]
    memberships: Tuple[int, ...]


def check_spec(spec: SymmetricFamilySpec) -> None:
    """Divisibility and cardinality constraints of the construction"""
    if spec.kind in PARTITION_KINDS:
        if spec.c is None or spec.c < 1 or spec.n % spec.c:
            raise BadDivisibility(f"block size must divide n={spec.n}", {"c": spec.c, "n": spec.n})
    if spec.kind in CARDINALITY_KINDS:
        limit = spec.n if spec.kind in (FamilyKind.ALL_K_SUBSETS, FamilyKind.CHAIN_K) else spec.c
        if spec.k is None or not 1 <= spec.k <= limit:
            raise BadCardinality(f"k must lie in 1..{limit}", {"k": spec.k, "kind": spec.kind.value})


def _mask(positions) -> int:
    return sum(1 << p for p in positions)


def _chain(positions: Sequence[int], k: int) -> List[int]:
    size = len(positions)
    return [_mask(positions[(j + t) % size] for t in range(k)) for j in range(size)]


def _blocks(n: int, c: int) -> List[List[int]]:
    return [list(range(start, start + c)) for start in range(0, n, c)]


def generate_family(spec: SymmetricFamilySpec, frame: Frame) -> List[FocalSet]:
    """Canonical (sorted, duplicate-free) family for the construction"""
    if frame.size != spec.n:
        raise SizeMismatch(f"spec is for n={spec.n} but the frame has {frame.size} elements",
                           {"n": spec.n, "frame": frame.size})
    check_spec(spec)
    n = spec.n
    positions = list(range(n))

    if spec.kind == FamilyKind.EQUAL_PARTITION:
        masks = [_mask(block) for block in _blocks(n, spec.c)]
    elif spec.kind == FamilyKind.ALL_K_SUBSETS:
        masks = [_mask(subset) for subset in combinations(positions, spec.k)]
    elif spec.kind == FamilyKind.CHAIN_K:
        masks = _chain(positions, spec.k)
    elif spec.kind == FamilyKind.PARTITION_ALL_SUBSETS:
        masks = [_mask(subset) for block in _blocks(n, spec.c) for subset in combinations(block, spec.k)]
    else:
        masks = [mask for block in _blocks(n, spec.c) for mask in _chain(block, spec.k)]

    return [FocalSet(bits=bits) for bits in sorted(set(masks))]


def verify_strong_symmetry(family: Sequence[FocalSet], frame: Frame) -> SymmetryReport:
    """Equal cardinalities and equal per-element membership counts"""
    cardinalities = Counter(focal_set.cardinality for focal_set in family)
    memberships = tuple(
        sum(1 for focal_set in family if focal_set.bits >> i & 1) for i in range(frame.size)
    )
    symmetric = bool(family) and len(cardinalities) == 1 and len(set(memberships)) == 1
    return SymmetryReport(
        symmetric=symmetric,
        cardinalities=dict(sorted(cardinalities.items())),
        memberships=memberships,
    )


def uniform_body(family: Sequence[FocalSet], frame: Frame) -> BodyOfEvidence:
    """Mass 1/|F| on every member"""
    seen = set()
    for focal_set in family:
        if focal_set.bits in seen:
            raise DuplicateFocalSet("family lists a focal set twice",
                                    {"set": list(frame.labels_of(focal_set.bits))})
        seen.add(focal_set.bits)
    mass = 1.0 / len(family)
    return validate_body(frame, [(focal_set, mass) for focal_set in family])


def admissible_specs(n: int) -> List[SymmetricFamilySpec]:
    """Every parameterisation of every construction for a frame of size n"""
    specs = []
    divisors = [c for c in range(1, n + 1) if n % c == 0]
    for c in divisors:
        specs.append(SymmetricFamilySpec(kind=FamilyKind.EQUAL_PARTITION, n=n, c=c))
    for k in range(1, n + 1):
        specs.append(SymmetricFamilySpec(kind=FamilyKind.ALL_K_SUBSETS, n=n, k=k))
        specs.append(SymmetricFamilySpec(kind=FamilyKind.CHAIN_K, n=n, k=k))
    for c in divisors:
        for k in range(1, c + 1):
            specs.append(SymmetricFamilySpec(kind=FamilyKind.PARTITION_ALL_SUBSETS, n=n, c=c, k=k))
            specs.append(SymmetricFamilySpec(kind=FamilyKind.PARTITION_CHAIN_K, n=n, c=c, k=k))
    return specs
