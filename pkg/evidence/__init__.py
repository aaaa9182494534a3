from evidence.models import Assignment, BodyOfEvidence, FocalSet, Frame, MeasureReport
from evidence.validation import (
    certainty_body,
    make_frame,
    product_frame,
    uniform_bayesian_body,
    vacuous_body,
    validate_body,
)
from evidence.measures import (
    conflict_con,
    conflict_CON,
    discord,
    discord_from_conflict,
    k_term,
    measure_report,
    nonspecificity,
    shannon_if_bayesian,
    strife,
    strife_from_conflict,
    total_NS,
    total_T,
)
from evidence.joins import FIRST_AXIS, SECOND_AXIS, marginalize, product_join, relabel
