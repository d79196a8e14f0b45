import random
from fractions import Fraction

import numpy as np
import pytest


def random_exact_matrix(rng: random.Random, n: int, span: int = 6) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = Fraction(rng.randint(-span, span), rng.randint(1, span))
    return out


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def nprng():
    return np.random.default_rng(20240817)
