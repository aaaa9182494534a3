from explorer.sampling import (
    random_bayesian_body,
    random_body,
    random_distribution,
    random_joint,
)
from explorer.search import (
    ViolationRecord,
    canonical_counterexample,
    reproduce_trial,
    search_subadditivity_violations,
)
