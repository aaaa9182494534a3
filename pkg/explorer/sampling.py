"""
Seeded random bodies, joints and possibility distributions.

All draws come from numpy's PCG64 bit generator, so a seed (or a
(seed, trial) pair) reproduces the same object on every platform.
"""

from typing import List, Optional, Sequence, Union

import numpy as np

from app.config import settings
from core.errors import FrameTooLarge, TooManyFocalSets
from evidence.models import BodyOfEvidence, Frame
from evidence.validation import make_frame, product_frame, validate_body
from possibility.distribution import PossibilityDistribution, make_distribution

Seed = Union[int, Sequence[int]]

MAX_SEARCH_FRAME = 16


def generator(seed: Seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def draw_subset(n: int, rng: np.random.Generator) -> int:
    flags = rng.integers(0, 2, size=n)
    return sum(1 << i for i, flag in enumerate(flags) if flag)


def draw_body(frame: Frame, focal_count: int, rng: np.random.Generator) -> BodyOfEvidence:
    """focal_count distinct nonempty subsets, masses uniform on the simplex"""
    limit = (1 << frame.size) - 1
    if not 1 <= focal_count <= limit:
        raise TooManyFocalSets(
            f"a frame of {frame.size} elements has {limit} nonempty subsets",
            {"focal_count": focal_count},
        )
    chosen: List[int] = []
    seen = set()
    while len(chosen) < focal_count:
        bits = draw_subset(frame.size, rng)
        if bits and bits not in seen:
            seen.add(bits)
            chosen.append(bits)

    weights = rng.exponential(scale=1.0, size=focal_count)
    masses = weights / weights.sum()
    return validate_body(frame, zip(chosen, masses.tolist()))


def random_body(frame: Frame, focal_count: int, seed: Seed) -> BodyOfEvidence:
    return draw_body(frame, focal_count, generator(seed))


def random_bayesian_body(frame: Frame, seed: Seed) -> BodyOfEvidence:
    """Random masses on every singleton"""
    rng = generator(seed)
    weights = rng.exponential(scale=1.0, size=frame.size)
    masses = weights / weights.sum()
    return validate_body(frame, [(1 << i, mass) for i, mass in enumerate(masses.tolist())])


def factor_frames(x_size: int, y_size: int) -> Frame:
    """Product of frames x1..xn and y1..ym"""
    if x_size * y_size > MAX_SEARCH_FRAME:
        raise FrameTooLarge(
            f"joint frames are limited to {MAX_SEARCH_FRAME} elements",
            {"x_size": x_size, "y_size": y_size},
        )
    x = make_frame([f"x{i}" for i in range(1, x_size + 1)])
    y = make_frame([f"y{i}" for i in range(1, y_size + 1)])
    return product_frame(x, y)


def random_joint(x_size: int, y_size: int, seed: int, trial: int,
                 max_focal: Optional[int] = None) -> BodyOfEvidence:
    """Random body directly on the product frame, reproducible from (seed, trial)"""
    frame = factor_frames(x_size, y_size)
    max_focal = settings.search_max_focal if max_focal is None else max_focal
    rng = generator([seed, trial])
    upper = min(max_focal, (1 << frame.size) - 1)
    focal_count = int(rng.integers(1, upper + 1))
    return draw_body(frame, focal_count, rng)


def random_distribution(n: int, seed: Seed) -> PossibilityDistribution:
    """r1 = 1 followed by n - 1 sorted uniform draws"""
    rng = generator(seed)
    tail = np.sort(rng.random(n - 1))[::-1]
    return make_distribution([1.0] + tail.tolist())
