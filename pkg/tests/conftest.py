import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "deterministic",
    settings(derandomize=True, max_examples=60, suppress_health_check=[HealthCheck.too_slow]),
)
settings.load_profile("deterministic")

from gvand.exponents import Support, affine_dimension, normalize


def random_support(rng: random.Random, n: int, N: int, exp_max: int) -> Support:
    assert N <= (exp_max + 1) ** n, "not enough distinct vectors in the exponent box"
    vecs = set()
    while len(vecs) < N:
        vecs.add(tuple(rng.randint(0, exp_max) for _ in range(n)))
    return Support(n, tuple(sorted(vecs)))


def zero_min_wide_corpus(count: int, seed: int):
    """Supports with zero componentwise minimum and affine dimension >= 2.

    Every third member is scaled by 2 or 3 so the corpus mixes scale
    gcd 1 with larger gcds.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice((2, 3))
        s = random_support(rng, n, rng.randint(3, 6), 5)
        s, _ = normalize(s)
        if affine_dimension(s) < 2:
            continue
        if len(out) % 3 == 2:
            k = rng.choice((2, 3))
            s = Support(s.n, tuple(tuple(k * x for x in v) for v in s.vectors))
        out.append(s)
    return out


@pytest.fixture(scope="session")
def agreement_corpus():
    return zero_min_wide_corpus(200, seed=20260814)


@pytest.fixture(scope="session")
def determinant_corpus():
    rng = random.Random(977)
    out = []
    for _ in range(100):
        n = rng.randint(1, 3)
        # the exponent box holds only 5 single-coordinate vectors
        top = 5 if n == 1 else 6
        out.append(random_support(rng, n, rng.randint(2, top), 4))
    return out
