import random
from fractions import Fraction

import pytest

from birlin import Form, GaussianRational


XYZ = ("x", "y", "z")


@pytest.fixture
def xyz():
    return tuple(Form.variable(XYZ, v) for v in XYZ)


def random_scalar(rng, complex_part=True):
    re = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
    im = Fraction(rng.randint(-5, 5), rng.randint(1, 5)) if complex_part else 0
    return GaussianRational(re, im)


def random_form(rng, variables, max_degree=3, n_terms=4, complex_part=True):
    terms = {}
    for _ in range(n_terms):
        exps = tuple(rng.randint(0, max_degree) for _ in variables)
        terms[exps] = random_scalar(rng, complex_part)
    return Form(variables, terms)


def random_homogeneous(rng, variables, degree, n_terms=4, complex_part=True):
    exps_pool = list(_exponents(len(variables), degree))
    terms = {}
    for _ in range(n_terms):
        exps = rng.choice(exps_pool)
        terms[exps] = random_scalar(rng, complex_part)
    return Form(variables, terms)


def _exponents(width, degree):
    if width == 1:
        yield (degree,)
        return
    for head in range(degree + 1):
        for tail in _exponents(width - 1, degree - head):
            yield (head,) + tail


def seeded(seed):
    return random.Random(seed)
