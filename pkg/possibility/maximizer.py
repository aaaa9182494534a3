"""
Numerical maxima of possibilistic strife and discord.

Coordinate ascent over (r2..rn) inside the nonincreasing region, with the
grid step refined by factors of ten down to the requested resolution.
Besides single coordinates, each run of tied values is also moved as a block
so the search cannot stall on a tie. Candidate distributions are evaluated
in one vectorised numpy call per move; the reported value is recomputed with
the exact closed forms.
"""

import logging
from typing import Callable, Dict, Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.config import settings
from app.monitoring import event
from core.errors import BadResolution, SizeOutOfRange
from possibility.distribution import PossibilityDistribution, make_distribution
from possibility.measures import possibilistic_discord, possibilistic_strife

logger = logging.getLogger(__name__)

MIN_SIZE = 2
MAX_SIZE = 24
MAX_RESOLUTION = 0.01
STEP_SPAN = 10
MAX_SWEEPS = 500
IMPROVEMENT = 1e-13

Objective = Literal["strife", "discord"]


class StrifeMaximum(BaseModel):
    """Best distribution found for one frame size"""

    model_config = ConfigDict(frozen=True)

    n: int
    objective: Objective = "strife"
    max_value: float
    argmax: PossibilityDistribution
    grid_resolution: float

    @property
    def max_strife(self) -> float:
        return self.max_value


def strife_values(R: np.ndarray) -> np.ndarray:
    """Possibilistic strife of each row of R (rows are r1..rn)"""
    k, n = R.shape
    M = R - np.concatenate([R[:, 1:], np.zeros((k, 1))], axis=1)
    i = np.arange(1, n + 1)
    prefix = np.cumsum(R, axis=1)
    return (M[:, 1:] * (np.log2(i[1:]) - np.log2(prefix[:, 1:]))).sum(axis=1)


def discord_values(R: np.ndarray) -> np.ndarray:
    """Possibilistic discord of each row of R"""
    k, n = R.shape
    M = R - np.concatenate([R[:, 1:], np.zeros((k, 1))], axis=1)
    i = np.arange(1, n + 1)
    head = np.cumsum(M, axis=1)
    scaled = M / i
    # tail[:, c] = sum of m_j / j over j > c + 1
    tail = np.cumsum(scaled[:, ::-1], axis=1)[:, ::-1] - scaled
    inner = head + i * tail
    return -(M * np.log2(inner)).sum(axis=1)


VECTOR_OBJECTIVES: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "strife": strife_values,
    "discord": discord_values,
}

EXACT_OBJECTIVES: Dict[str, Callable[[PossibilityDistribution], float]] = {
    "strife": possibilistic_strife,
    "discord": possibilistic_discord,
}


def check_search_input(n: int, resolution: float) -> None:
    if not MIN_SIZE <= n <= MAX_SIZE:
        raise SizeOutOfRange(f"n must lie in {MIN_SIZE}..{MAX_SIZE}", {"n": n})
    if not 0 < resolution <= MAX_RESOLUTION:
        raise BadResolution(f"resolution must lie in (0, {MAX_RESOLUTION}]", {"resolution": resolution})


def grid_steps(resolution: float) -> List[float]:
    steps = []
    step = 0.1
    while step > resolution * (1 + 1e-9):
        steps.append(step)
        step /= 10
    steps.append(resolution)
    return steps


def uniform_decay(n: int) -> np.ndarray:
    """Starting point r_i = 1 - (i - 1) / n"""
    return 1.0 - np.arange(n) / n


def _tie_runs(r: np.ndarray) -> List[Tuple[int, int]]:
    runs = []
    start = 1
    n = len(r)
    while start < n:
        end = start
        while end + 1 < n and r[end + 1] == r[start]:
            end += 1
        if end > start:
            runs.append((start, end))
        start = end + 1
    return runs


def _move(r: np.ndarray, first: int, last: int, step: float, value: float,
          objective: Callable[[np.ndarray], np.ndarray]) -> Tuple[np.ndarray, float, bool]:
    """Best grid move of r[first..last] (moved together) within its bounds"""
    n = len(r)
    low = r[last + 1] if last + 1 < n else 0.0
    high = r[first - 1]
    current = r[first]
    offsets = np.arange(-STEP_SPAN, STEP_SPAN + 1) * step
    candidates = np.unique(np.concatenate([np.clip(current + offsets, low, high), [low, high]]))
    R = np.tile(r, (len(candidates), 1))
    R[:, first:last + 1] = candidates[:, None]
    values = objective(R)
    best = int(np.argmax(values))
    if values[best] > value + IMPROVEMENT:
        return R[best].copy(), float(values[best]), True
    return r, value, False


def coordinate_ascent(start: np.ndarray, objective: Callable[[np.ndarray], np.ndarray],
                      resolution: float) -> Tuple[np.ndarray, float]:
    r = np.array(start, dtype=float)
    r[0] = 1.0
    value = float(objective(r[None, :])[0])
    for step in grid_steps(resolution):
        for _ in range(MAX_SWEEPS):
            improved = False
            for i in range(1, len(r)):
                r, value, moved = _move(r, i, i, step, value, objective)
                improved |= moved
            for first, last in _tie_runs(r):
                r, value, moved = _move(r, first, last, step, value, objective)
                improved |= moved
            if not improved:
                break
    return r, value


def _pad(dist: PossibilityDistribution, n: int) -> np.ndarray:
    return np.concatenate([np.array(dist.values), np.zeros(n - dist.size)])


def _best_of(points: Iterable[np.ndarray], objective: str) -> Tuple[PossibilityDistribution, float]:
    """Highest exact value; ties go to the lexicographically smallest distribution"""
    best: Optional[Tuple[float, Tuple[float, ...]]] = None
    for point in points:
        dist = make_distribution(point.tolist())
        value = EXACT_OBJECTIVES[objective](dist)
        key = (value, dist.values)
        if best is None or value > best[0] or (value == best[0] and dist.values < best[1]):
            best = key
    return make_distribution(best[1]), best[0]


def _maximize(n: int, resolution: float, objective: str,
              starts: Sequence[np.ndarray]) -> StrifeMaximum:
    check_search_input(n, resolution)
    vector_objective = VECTOR_OBJECTIVES[objective]
    points = []
    for start in starts:
        r, _ = coordinate_ascent(start, vector_objective, resolution)
        points.extend([np.array(start, dtype=float), r])
    argmax, value = _best_of(points, objective)

    if value > settings.strife_ceiling:
        logger.warning(event("ceiling_exceeded", objective=objective, n=n, value=value,
                             ceiling=settings.strife_ceiling))
    logger.debug(event("maximized", objective=objective, n=n, value=value))
    return StrifeMaximum(n=n, objective=objective, max_value=value, argmax=argmax,
                         grid_resolution=resolution)


def maximize_strife(n: int, resolution: Optional[float] = None) -> StrifeMaximum:
    resolution = settings.default_resolution if resolution is None else resolution
    check_search_input(n, resolution)
    return _maximize(n, resolution, "strife", [uniform_decay(n)])


def maximize_discord(n: int, resolution: Optional[float] = None) -> StrifeMaximum:
    resolution = settings.default_resolution if resolution is None else resolution
    check_search_input(n, resolution)
    return _maximize(n, resolution, "discord", [uniform_decay(n)])


def maximize_series(n_values: Iterable[int], objective: Objective = "strife",
                    resolution: Optional[float] = None) -> List[StrifeMaximum]:
    """Maxima for each n; each search is also warm-started from the previous
    argmax padded with zeros, which attains the previous maximum exactly,
    so the returned values never decrease."""
    resolution = settings.default_resolution if resolution is None else resolution
    sizes = sorted(set(n_values))
    for n in sizes:
        check_search_input(n, resolution)

    results: List[StrifeMaximum] = []
    for n in sizes:
        starts = [uniform_decay(n)]
        if results:
            starts.append(_pad(results[-1].argmax, n))
        results.append(_maximize(n, resolution, objective, starts))
    return results


def verify_maximum(result: StrifeMaximum, restarts: Optional[int] = None, seed: int = 0) -> float:
    """Best value from fixed-seed random restarts, to cross-check a maximum"""
    restarts = settings.restart_count if restarts is None else restarts
    rng = np.random.Generator(np.random.PCG64(seed))
    vector_objective = VECTOR_OBJECTIVES[result.objective]
    points = []
    for _ in range(restarts):
        tail = np.sort(rng.random(result.n - 1))[::-1]
        start = np.concatenate([[1.0], tail])
        r, _ = coordinate_ascent(start, vector_objective, result.grid_resolution)
        points.append(r)
    _, value = _best_of(points, result.objective)
    return value
