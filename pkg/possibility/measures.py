"""
Closed forms of nonspecificity, strife, NS and discord for ordered
possibility distributions.
"""

import math
from typing import List

from possibility.distribution import PossibilityDistribution


def _prefix_sums(values) -> List[float]:
    prefix = []
    running = 0.0
    for r in values:
        running += r
        prefix.append(running)
    return prefix


def possibilistic_nonspecificity(dist: PossibilityDistribution) -> float:
    """N = sum_(i=2..n) (r_i - r_(i+1)) log2 i"""
    masses = dist.masses()
    return math.fsum(masses[i - 1] * math.log2(i) for i in range(2, dist.size + 1))


def _subtracted_term(dist: PossibilityDistribution) -> float:
    # sum_(i=2..n) (r_i - r_(i+1)) log2 sum_(j<=i) r_j
    masses = dist.masses()
    prefix = _prefix_sums(dist.values)
    return math.fsum(masses[i - 1] * math.log2(prefix[i - 1]) for i in range(2, dist.size + 1))


def possibilistic_strife(dist: PossibilityDistribution) -> float:
    return possibilistic_nonspecificity(dist) - _subtracted_term(dist)


def possibilistic_total_NS(dist: PossibilityDistribution) -> float:
    return 2 * possibilistic_nonspecificity(dist) - _subtracted_term(dist)


def possibilistic_discord(dist: PossibilityDistribution) -> float:
    """Discord of the nested body.

    For A_i = {x1..xi}: sum_j m_j |A_i & A_j| / |A_j| = sum_(j<=i) m_j + i * sum_(j>i) m_j / j
    """
    masses = dist.masses()
    n = dist.size
    tail = [0.0] * (n + 1)
    for j in range(n, 0, -1):
        tail[j - 1] = tail[j] + masses[j - 1] / j
    terms = []
    head = 0.0
    for i in range(1, n + 1):
        head += masses[i - 1]
        if masses[i - 1] > 0:
            terms.append(masses[i - 1] * math.log2(head + i * tail[i]))
    return -math.fsum(terms)
