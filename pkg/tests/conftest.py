import random

import pytest

from beg_dobrushin.model import MajorRegion


def point_in_band(band: str, rng: random.Random) -> tuple[float, float]:
    """Random point in one of the y-bands A/B/C of the strip x+y+1<0, x<0."""
    if band == "A":
        y = rng.uniform(1.0, 4.0)
        return (-(y + 1) - rng.uniform(0.1, 5.0), y)
    if band == "B":
        y = rng.uniform(-0.95, 0.95)
        return (-(y + 1) - rng.uniform(0.1, 5.0), y)
    if band == "C":
        y = rng.uniform(-5.0, -1.0)
        return (-rng.uniform(0.1, 5.0), y)
    raise ValueError(band)


def point_in_major(major: MajorRegion, rng: random.Random) -> tuple[float, float]:
    """Random point strictly inside one major region."""
    if major is MajorRegion.FERROMAGNETIC:
        x = rng.uniform(-3.0, 3.0)
        y = max(-1 - 2 * x, -1 - x) + rng.uniform(0.1, 4.0)
        return (x, y)
    if major is MajorRegion.DISORDERED:
        x = -rng.uniform(0.1, 5.0)
        y = -1 - 2 * x - rng.uniform(0.1, 4.0)
        return (x, y)
    if major is MajorRegion.ANTIQUADRUPOLAR:
        x = rng.uniform(0.1, 5.0)
        y = -1 - x - rng.uniform(0.1, 4.0)
        return (x, y)
    raise ValueError(major)


@pytest.fixture
def rng():
    return random.Random(20260824)
