"""
Product joins, marginals and relabelling of bodies of evidence
"""

from collections import defaultdict
from typing import Dict, Sequence

from core.errors import NotAProductFrame, SizeMismatch
from evidence.models import BodyOfEvidence, Frame
from evidence.validation import make_frame, product_frame, validate_body

FIRST_AXIS = 0
SECOND_AXIS = 1


def product_bits(a_bits: int, b_bits: int, y_size: int) -> int:
    """Bitmask of A x B when pair (i, j) sits at bit i * |Y| + j"""
    bits = 0
    i = 0
    while a_bits:
        if a_bits & 1:
            bits |= b_bits << (i * y_size)
        a_bits >>= 1
        i += 1
    return bits


def product_join(x_body: BodyOfEvidence, y_body: BodyOfEvidence) -> BodyOfEvidence:
    """Noninteractive joint: m(A x B) = m_x(A) * m_y(B)"""
    frame = product_frame(x_body.frame, y_body.frame)
    y_size = y_body.frame.size
    entries = [
        (product_bits(a_bits, b_bits, y_size), a_mass * b_mass)
        for a_bits, _, a_mass in x_body.entries()
        for b_bits, _, b_mass in y_body.entries()
    ]
    return validate_body(frame, entries)


def project(bits: int, frame: Frame, axis: int) -> int:
    """Projection of a subset of a product frame onto one factor"""
    x, y = frame.factors
    y_size = y.size
    projected = 0
    for i in range(x.size):
        row = bits >> (i * y_size) & y.full_bits
        if not row:
            continue
        if axis == FIRST_AXIS:
            projected |= 1 << i
        else:
            projected |= row
    return projected


def marginalize(joint: BodyOfEvidence, axis: int) -> BodyOfEvidence:
    """Marginal body: m_axis(A) sums m over joint focal sets projecting onto A"""
    frame = joint.frame
    if not frame.is_product:
        raise NotAProductFrame("marginalization needs a product-tagged frame", {"labels": list(frame.labels[:4])})
    if axis not in (FIRST_AXIS, SECOND_AXIS):
        raise NotAProductFrame(f"axis must be {FIRST_AXIS} or {SECOND_AXIS}", {"axis": axis})

    marginal: Dict[int, float] = defaultdict(float)
    for bits, _, mass in joint.entries():
        marginal[project(bits, frame, axis)] += mass
    return validate_body(frame.factors[axis], marginal.items())


def relabel(body: BodyOfEvidence, permutation: Sequence[int]) -> BodyOfEvidence:
    """Move element i of the frame to position permutation[i]"""
    n = body.frame.size
    if sorted(permutation) != list(range(n)):
        raise SizeMismatch("permutation must rearrange every frame position exactly once", {"size": n})

    labels = [""] * n
    for old, new in enumerate(permutation):
        labels[new] = body.frame.labels[old]
    frame = make_frame(labels)

    def moved(bits: int) -> int:
        return sum(1 << permutation[i] for i in range(n) if bits >> i & 1)

    return validate_body(frame, [(moved(bits), mass) for bits, _, mass in body.entries()])
