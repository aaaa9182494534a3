"""
Uncertainty measures of a body of evidence, all in bits.

Set difference |A - B| is the cardinality of A & ~B on the bitmasks.
Inner sums in discord and strife are at least m(A) > 0, so no log of zero
is ever taken.
"""

import logging
import math
from typing import Optional

from app.config import settings
from app.monitoring import event
from core.errors import NotAFocalSet
from evidence.models import BodyOfEvidence, FocalSet, MeasureReport

logger = logging.getLogger(__name__)


def _require_focal(body: BodyOfEvidence, a: FocalSet) -> int:
    bits = a.bits
    if all(entry_bits != bits for entry_bits, _, _ in body.entries()):
        raise NotAFocalSet(
            "set is not a focal set of the body",
            {"set": list(body.frame.labels_of(bits))},
        )
    return bits


def nonspecificity(body: BodyOfEvidence) -> float:
    """N(m) = sum m(A) log2 |A|"""
    return math.fsum(mass * math.log2(card) for _, card, mass in body.entries())


def conflict_con(body: BodyOfEvidence, a: FocalSet) -> float:
    """Con(A) = sum m(B) |B - A| / |B|"""
    a_bits = _require_focal(body, a)
    return math.fsum(
        mass * (b_bits & ~a_bits).bit_count() / card for b_bits, card, mass in body.entries()
    )


def conflict_CON(body: BodyOfEvidence, a: FocalSet) -> float:
    """CON(A) = sum m(B) |A - B| / |A|"""
    a_bits = _require_focal(body, a)
    a_card = a.cardinality
    return math.fsum(
        mass * (a_bits & ~b_bits).bit_count() / a_card for b_bits, _, mass in body.entries()
    )


def discord(body: BodyOfEvidence) -> float:
    """D(m) = -sum m(A) log2 sum m(B) |A & B| / |B|"""
    entries = body.entries()
    terms = []
    for a_bits, _, a_mass in entries:
        inner = math.fsum(mass * (a_bits & b_bits).bit_count() / card for b_bits, card, mass in entries)
        terms.append(a_mass * math.log2(inner))
    return -math.fsum(terms)


def discord_from_conflict(body: BodyOfEvidence) -> float:
    """D(m) = -sum m(A) log2 [1 - Con(A)]"""
    return -math.fsum(
        a.mass * math.log2(1.0 - conflict_con(body, a.focal_set)) for a in body.assignments
    )


def strife(body: BodyOfEvidence) -> float:
    """S(m) = -sum m(A) log2 sum m(B) |A & B| / |A|"""
    entries = body.entries()
    terms = []
    for a_bits, a_card, a_mass in entries:
        inner = math.fsum(mass * (a_bits & b_bits).bit_count() for b_bits, _, mass in entries) / a_card
        terms.append(a_mass * math.log2(inner))
    return -math.fsum(terms)


def strife_from_conflict(body: BodyOfEvidence) -> float:
    """S(m) = -sum m(A) log2 [1 - CON(A)]"""
    return -math.fsum(
        a.mass * math.log2(1.0 - conflict_CON(body, a.focal_set)) for a in body.assignments
    )


def k_term(body: BodyOfEvidence) -> float:
    """K(m) = sum m(A) log2 sum m(B) |A & B|, so that S = N - K"""
    entries = body.entries()
    return math.fsum(
        a_mass * math.log2(math.fsum(mass * (a_bits & b_bits).bit_count() for b_bits, _, mass in entries))
        for a_bits, _, a_mass in entries
    )


def total_T(body: BodyOfEvidence) -> float:
    """T(m) = N(m) + D(m)"""
    return nonspecificity(body) + discord(body)


def _check_ns_range(body: BodyOfEvidence, value: float) -> None:
    # conjectured range only: log, never reject
    ceiling = math.log2(body.frame.size)
    if value < -settings.conjecture_tolerance or value > ceiling + settings.conjecture_tolerance:
        logger.warning(event(
            "ns_range_violation",
            value=value,
            ceiling=ceiling,
            frame_size=body.frame.size,
        ))


def total_NS(body: BodyOfEvidence) -> float:
    """NS(m) = N(m) + S(m), equal to 2N(m) - K(m)"""
    value = nonspecificity(body) + strife(body)
    _check_ns_range(body, value)
    return value


def shannon_if_bayesian(body: BodyOfEvidence) -> Optional[float]:
    """Shannon entropy when every focal set is a singleton, otherwise None"""
    if not body.is_bayesian:
        return None
    return -math.fsum(mass * math.log2(mass) for _, _, mass in body.entries())


def measure_report(body: BodyOfEvidence) -> MeasureReport:
    """Compute every measure of the body"""
    n = nonspecificity(body)
    d = discord(body)
    k = k_term(body)
    s = strife(body)
    ns = n + s
    _check_ns_range(body, ns)
    shannon = shannon_if_bayesian(body)
    logger.debug(event("measured", focal_sets=len(body.assignments), frame_size=body.frame.size))
    return MeasureReport(
        nonspecificity=n,
        discord=d,
        strife=s,
        k_term=k,
        total_T=n + d,
        total_NS=ns,
        is_bayesian=shannon is not None,
        shannon=shannon,
    )
