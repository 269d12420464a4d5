import random
from fractions import Fraction

import pytest

from hookcells import FormSpace
from hookcells.errors import DegenerateBasis


@pytest.fixture
def rng():
    return random.Random(0x5EED)


def random_fraction(rng, num=9, den=3):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_space(rng, d, j, num=9, den=3):
    """A random d-dimensional subspace of the degree-j forms."""
    while True:
        rows = [[random_fraction(rng, num, den) for _ in range(j + 1)] for _ in range(d)]
        try:
            return FormSpace(j, rows)
        except DegenerateBasis:
            continue
