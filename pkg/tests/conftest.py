import random
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from steptardy import Instance, Job

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA_DIR = Path(__file__).parent / "data"

# 8-job reference instance used across the suite; columns are (a, d, h, b)
DEMO8_ROWS = {
    1: (49, 113, 271, 33),
    2: (44, 86, 255, 19),
    3: (45, 114, 91, 41),
    4: (31, 218, 131, 27),
    5: (51, 156, 205, 18),
    6: (52, 461, 101, 47),
    7: (82, 215, 367, 44),
    8: (80, 93, 85, 28),
}


def make_instance(rows, name="", seed=None):
    """Build an instance from (a, b, d, h) tuples, ids assigned 1..n."""
    jobs = tuple(
        Job(id=i, a=a, b=b, d=d, h=h) for i, (a, b, d, h) in enumerate(rows, start=1)
    )
    return Instance(jobs=jobs, name=name, seed=seed)


def random_instance(rng: random.Random, n: int, max_a=30, max_b=15, max_d=150, max_h=80):
    return make_instance(
        [
            (rng.randint(1, max_a), rng.randint(0, max_b), rng.randint(0, max_d), rng.randint(0, max_h))
            for _ in range(n)
        ]
    )


@pytest.fixture(scope="session")
def demo8() -> Instance:
    jobs = tuple(
        Job(id=i, a=a, b=b, d=d, h=h) for i, (a, d, h, b) in DEMO8_ROWS.items()
    )
    return Instance(jobs=jobs, name="demo8")


@pytest.fixture(scope="session")
def demo8_path() -> Path:
    return DATA_DIR / "demo8.json"


@st.composite
def instances(draw, min_n=1, max_n=8, max_a=30, max_b=15, max_d=150, max_h=80):
    n = draw(st.integers(min_n, max_n))
    jobs = tuple(
        Job(
            id=i,
            a=draw(st.integers(1, max_a)),
            b=draw(st.integers(0, max_b)),
            d=draw(st.integers(0, max_d)),
            h=draw(st.integers(0, max_h)),
        )
        for i in range(1, n + 1)
    )
    return Instance(jobs=jobs)


@st.composite
def instances_with_sequence(draw, min_n=1, max_n=8, **kwargs):
    instance = draw(instances(min_n=min_n, max_n=max_n, **kwargs))
    sequence = draw(st.permutations(list(range(1, instance.n + 1))))
    return instance, list(sequence)
