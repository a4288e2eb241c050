"""Acceptance gate: eight exact end-to-end criteria, one pass/fail line each.

Every check is exact (zero tolerance); the pass/fail lines are written to the
real stdout so they survive pytest's capture.
"""

import functools
import itertools
import json
import sys
import time
from pathlib import Path

import pytest

from birlin import (
    BihomogeneousForm,
    Form,
    GaussianRational,
    NotClosedAtDegree,
    RationalSampler,
    bihomogeneous_decompose,
    build_certificate,
    certificate_identity_failures,
    family_decompose,
    graph_point,
    levi_form,
    map_from_matrix,
    new_defining_poly,
    new_map,
    segre_graph_degree_bound,
    segre_symmetry_check,
    segre_variety,
    unit_ball,
    verify_equivariance,
)
from birlin.bihom import reconstruct
from birlin.cli import main as cli_main
from birlin.domains import domain_variables
from birlin.jsonio import certificate_from_json, family_from_json, load
from birlin.linalg import (
    form_rank,
    identity_matrix,
    mat_mul,
    nullspace,
    rank,
)
from birlin.sampling import DEFAULT_SEED
from birlin.textform import parse_form

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
XYZ = ("x", "y", "z")
CUBIC_SEED_EXPS = [
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (0, 2, 1),
    (1, 0, 2),
    (0, 1, 2),
    (1, 1, 1),
]


def criterion(number, label):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                fn()
            except BaseException:
                print(f"criterion {number} ({label}): FAIL", file=sys.__stdout__)
                raise
            print(f"criterion {number} ({label}): PASS", file=sys.__stdout__)

        return run

    return wrap


def cremona_map():
    return new_map([parse_form(t, XYZ) for t in ("y*z", "x*z", "x*y")])


def cremona_seeds():
    return [Form.monomial(XYZ, exps) for exps in CUBIC_SEED_EXPS]


def is_permutation_matrix(matrix):
    n = len(matrix)
    one = GaussianRational.coerce(1)
    for row in matrix:
        nonzero = [c for c in row if not c.is_zero()]
        if nonzero != [one]:
            return False
    for j in range(n):
        if sum(1 for i in range(n) if not matrix[i][j].is_zero()) != 1:
            return False
    return True


def random_invertible_matrix(sampler, n):
    while True:
        matrix = [[sampler.scalar() for _ in range(n)] for _ in range(n)]
        if rank(matrix) == n:
            return matrix


def normalize_matrix(matrix):
    for row in matrix:
        for entry in row:
            if not entry.is_zero():
                inv = entry.inverse()
                return [[e * inv for e in r] for r in matrix]
    raise AssertionError("zero matrix")


@criterion(1, "Cremona cubic linearization")
def test_criterion_1_cremona_certificate():
    start = time.monotonic()
    cert = build_certificate(cremona_seeds(), [cremona_map()], 3, dim_cap=200)
    assert cert.dimension == 7
    entry = cert.entries[0]
    assert entry.cofactor == parse_form("x*y*z", XYZ)
    assert is_permutation_matrix(entry.matrix)
    assert mat_mul(entry.matrix, entry.matrix) == identity_matrix(7)
    assert entry.matrix != identity_matrix(7)  # order exactly 2
    assert time.monotonic() - start < 1.0


@criterion(2, "linear maps give the tautological representation")
def test_criterion_2_linear_degeneration():
    start = time.monotonic()
    sampler = RationalSampler(DEFAULT_SEED)
    seeds = [Form.variable(XYZ, v) for v in XYZ]
    one = Form.one(XYZ)
    for _ in range(5):
        matrix = normalize_matrix(random_invertible_matrix(sampler, 3))
        g = map_from_matrix(matrix, XYZ)
        cert = build_certificate(seeds, [g], 1, dim_cap=200)
        assert cert.dimension == 3
        entry = cert.entries[0]
        assert entry.matrix == matrix
        assert entry.cofactor == one
    assert time.monotonic() - start < 1.0


@criterion(3, "certificate identities, shipped and fresh")
def test_criterion_3_identity_suite():
    for name in ("cremona_certificate.json", "moebius_certificate.json"):
        cert = certificate_from_json(load(FIXTURES / name))
        assert certificate_identity_failures(cert) == []
        # standalone verifier, from the JSON file alone
        assert cli_main(["--task", "verify", "--input", str(FIXTURES / name)]) == 0
    fresh = build_certificate(cremona_seeds(), [cremona_map()], 3, dim_cap=200)
    assert certificate_identity_failures(fresh) == []


@criterion(4, "equivariance on 100 seeded points per certificate")
def test_criterion_4_equivariance_sampling():
    for name in ("cremona_certificate.json", "moebius_certificate.json"):
        cert = certificate_from_json(load(FIXTURES / name))
        n = len(cert.space.variables)
        sampler = RationalSampler(DEFAULT_SEED)
        from birlin.maps import ProjectivePoint

        samples = [ProjectivePoint(sampler.point(n)) for _ in range(100)]
        report = verify_equivariance(cert, samples)
        assert not [r for r in report if r["status"] == "violation"]
        assert [r for r in report if r["status"] == "ok"]


@criterion(5, "Bezout bound for Segre-embedded Moebius graphs")
def test_criterion_5_bezout_bound():
    start = time.monotonic()
    assert segre_graph_degree_bound(1, 1) == 2
    xy = ("x", "y")
    quadric_exps = [
        e
        for e in itertools.product(range(3), repeat=4)
        if sum(e) == 2
    ]
    assert len(quadric_exps) == 10
    sampler = RationalSampler(DEFAULT_SEED)
    from birlin.maps import ProjectivePoint

    for _ in range(20):
        g = map_from_matrix(random_invertible_matrix(sampler, 2), xy)

        def graph_row(point):
            coords = graph_point(g, point).coordinates
            return [
                functools.reduce(
                    lambda acc, pair: acc * pair[0] ** pair[1],
                    zip(coords, exps),
                    GaussianRational.coerce(1),
                )
                for exps in quadric_exps
            ]

        fit_points = [ProjectivePoint(sampler.point(2)) for _ in range(12)]
        kernel = nullspace([graph_row(p) for p in fit_points])
        assert kernel, "no quadric through the sampled graph points"
        quadric = kernel[0]
        assert any(not c.is_zero() for c in quadric)
        for _ in range(50):
            row = graph_row(ProjectivePoint(sampler.point(2)))
            value = sum(
                (c * v for c, v in zip(quadric, row)),
                GaussianRational.coerce(0),
            )
            assert value.is_zero()
    assert time.monotonic() - start < 5.0


def random_bihomogeneous(sampler, rng):
    nx, ny = rng.randint(1, 3), rng.randint(1, 3)
    dx, dy = rng.randint(1, 4), rng.randint(1, 4)
    x_vars = tuple(f"x{i}" for i in range(nx))
    y_vars = tuple(f"y{i}" for i in range(ny))
    joint = x_vars + y_vars
    x_exps = [e for e in itertools.product(range(dx + 1), repeat=nx) if sum(e) == dx]
    y_exps = [e for e in itertools.product(range(dy + 1), repeat=ny) if sum(e) == dy]
    form = Form.zero(joint)
    while form.is_zero():
        terms = {}
        for _ in range(rng.randint(1, 6)):
            key = rng.choice(x_exps) + rng.choice(y_exps)
            coeff = sampler.scalar()
            if not coeff.is_zero():
                terms[key] = terms.get(key, GaussianRational.coerce(0)) + coeff
        terms = {k: v for k, v in terms.items() if not v.is_zero()}
        form = Form(joint, terms)
    return BihomogeneousForm(form, x_vars, y_vars, (dx, dy))


@criterion(6, "bihomogeneous decomposition round-trip")
def test_criterion_6_decomposition_round_trip():
    import random

    rng = random.Random(DEFAULT_SEED)
    sampler = RationalSampler(DEFAULT_SEED)
    for _ in range(50):
        bf = random_bihomogeneous(sampler, rng)
        pairs = bihomogeneous_decompose(bf)
        assert reconstruct(pairs, bf.x_variables, bf.y_variables) == bf.form
        psis = [psi for _, psi in pairs]
        assert form_rank(psis) == len(psis)
    family = family_from_json(load(FIXTURES / "moebius_family_job.json")["family"])
    _, space = family_decompose(family, parse_form("y0", family.y_variables))
    assert list(space.basis) == [
        Form.variable(family.y_variables, "y0"),
        Form.variable(family.y_variables, "y1"),
    ]


@criterion(7, "CR domain suite: Segre varieties and Levi forms")
def test_criterion_7_domains_suite():
    start = time.monotonic()
    ball = unit_ball(2)
    one = GaussianRational.coerce(1)
    zero = GaussianRational.coerce(0)

    q = segre_variety(ball, [one, zero])
    assert not q.degenerate
    assert q.poly == parse_form("z1 - 1", q.poly.variables)

    report = levi_form(ball, [one, zero])
    assert report.nondegenerate

    sampler = RationalSampler(DEFAULT_SEED)
    for _ in range(50):
        z0 = sampler.affine_point(2)
        w0 = sampler.affine_point(2)
        forward, backward = segre_symmetry_check(ball, z0, w0)
        assert forward == backward

    degenerate = new_defining_poly(
        2, parse_form("z1*c1 + z2^2*c2^2 - 1", domain_variables(2))
    )
    assert not levi_form(degenerate, [one, zero]).nondegenerate
    assert levi_form(degenerate, [zero, one]).nondegenerate
    assert time.monotonic() - start < 1.0


@criterion(8, "negative paths: honest failure with localized diagnostics")
def test_criterion_8_negative_paths():
    seeds = [Form.variable(XYZ, v) for v in XYZ]
    with pytest.raises(NotClosedAtDegree):
        build_certificate(seeds, [cremona_map()], 1, dim_cap=200)

    doc = load(FIXTURES / "cremona_certificate.json")
    doc["generators"][0]["matrix"][2][5] = "1/3"
    corrupted = certificate_from_json(doc)
    failures = certificate_identity_failures(corrupted)
    assert failures
    assert failures[0][0] == 0
    assert any(f[1] == 2 for f in failures)

    import tempfile

    with tempfile.TemporaryDirectory() as d:
        bad = Path(d) / "corrupted.json"
        bad.write_text(json.dumps(doc))
        assert cli_main(["--task", "verify", "--input", str(bad)]) == 2
