from possibility.distribution import (
    PossibilityDistribution,
    default_frame,
    make_distribution,
    parse_distribution,
    to_consonant_body,
)
from possibility.measures import (
    possibilistic_discord,
    possibilistic_nonspecificity,
    possibilistic_strife,
    possibilistic_total_NS,
)
from possibility.maximizer import (
    StrifeMaximum,
    maximize_discord,
    maximize_series,
    maximize_strife,
    verify_maximum,
)
