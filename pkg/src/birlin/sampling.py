"""Deterministic seeded rational samples with small numerators/denominators.

All randomized verification flows through one seed; bounds |num|, den <= 7
keep exact coefficient growth in check.
"""

import random
from fractions import Fraction

from .field import GaussianRational

DEFAULT_SEED = 20240917
MAX_NUM = 7
MAX_DEN = 7


class RationalSampler:
    def __init__(self, seed=DEFAULT_SEED):
        self.rng = random.Random(seed)

    def fraction(self, allow_zero=True):
        while True:
            q = Fraction(self.rng.randint(-MAX_NUM, MAX_NUM), self.rng.randint(1, MAX_DEN))
            if allow_zero or q != 0:
                return q

    def scalar(self, complex_part=True, allow_zero=True):
        while True:
            re = self.fraction()
            im = self.fraction() if complex_part else Fraction(0)
            value = GaussianRational(re, im)
            if allow_zero or not value.is_zero():
                return value

    def point(self, n_coordinates, complex_part=True):
        """Projective sample: coordinates not all zero."""
        while True:
            coords = [self.scalar(complex_part) for _ in range(n_coordinates)]
            if any(not c.is_zero() for c in coords):
                return coords

    def affine_point(self, n_coordinates, complex_part=True):
        return [self.scalar(complex_part) for _ in range(n_coordinates)]
