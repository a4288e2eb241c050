import pytest

from birlin import (
    ArityError,
    DegenerateCompositionError,
    DegreeError,
    Form,
    GaussianRational,
    IndeterminatePointError,
    ProjectivePoint,
    apply_map,
    compose,
    graph_point,
    identity_map,
    is_identity_up_to_scalar,
    map_from_matrix,
    new_map,
    segre_embed,
    segre_graph_degree_bound,
    verify_inverse,
)
from birlin.errors import ZeroInputError
from birlin.gcd import gcd_many
from birlin.linalg import mat_mul, mat_inverse
from birlin.maps import normalized_components

from conftest import XYZ, seeded, random_scalar


def cremona(xyz):
    x, y, z = xyz
    return new_map([y * z, x * z, x * y])


def test_new_map_reduces_to_primitive(xyz):
    x, y, z = xyz
    f = new_map([x * z, y * z, z ** 2])
    assert f.degree == 1
    assert is_identity_up_to_scalar(f)


def test_new_map_cremona_unchanged(xyz):
    f = cremona(xyz)
    assert f.degree == 2
    assert gcd_many(list(f.components)).total_degree() == 0


def test_new_map_arity_error():
    xy = ("x", "y", "z")
    x = Form.variable(xy, "x")
    y = Form.variable(xy, "y")
    with pytest.raises(ArityError):
        new_map([x, y])


def test_new_map_degree_and_zero_errors(xyz):
    x, y, z = xyz
    with pytest.raises(DegreeError):
        new_map([x, y * z, z])
    with pytest.raises(ZeroInputError):
        new_map([Form.zero(XYZ)] * 3)


def test_new_map_idempotent(xyz):
    f = cremona(xyz)
    again = new_map(list(f.components))
    assert normalized_components(again) == normalized_components(f)


def test_compose_cremona_involution(xyz):
    f = cremona(xyz)
    assert is_identity_up_to_scalar(compose(f, f))


def test_compose_with_identity(xyz):
    f = cremona(xyz)
    assert compose(identity_map(XYZ), f) == f
    assert compose(f, identity_map(XYZ)) == f


def test_compose_moebius_matches_matrix_product():
    rng = seeded(77)
    ys = ("y0", "y1")
    for _ in range(10):
        a = [[random_scalar(rng) for _ in range(2)] for _ in range(2)]
        b = [[random_scalar(rng) for _ in range(2)] for _ in range(2)]
        if mat_inverse(a) is None or mat_inverse(b) is None:
            continue
        fa, fb = map_from_matrix(a, ys), map_from_matrix(b, ys)
        assert compose(fa, fb) == map_from_matrix(mat_mul(a, b), ys)


def test_degenerate_composition(xyz):
    x, y, z = xyz
    # f kills the image line {x=0, y=0} of g
    f = new_map([x * y, x ** 2, y ** 2])
    g = new_map([Form.zero(XYZ), Form.zero(XYZ), z])
    with pytest.raises(DegenerateCompositionError):
        compose(f, g)


def test_identity_up_to_scalar(xyz):
    x, y, z = xyz
    assert is_identity_up_to_scalar(new_map([x, y, z]))
    assert is_identity_up_to_scalar(new_map([x.scale(2), y.scale(2), z.scale(2)]))
    assert not is_identity_up_to_scalar(cremona(xyz))


def test_verify_inverse(xyz):
    f = cremona(xyz)
    g = cremona(xyz)
    assert verify_inverse(f, g)
    assert f.inverse is g
    assert g.inverse is f
    assert not verify_inverse(identity_map(XYZ), cremona(xyz))


def test_verify_inverse_moebius_matrices():
    rng = seeded(99)
    ys = ("y0", "y1")
    for _ in range(5):
        a = [[random_scalar(rng) for _ in range(2)] for _ in range(2)]
        inv = mat_inverse(a)
        if inv is None:
            continue
        assert verify_inverse(map_from_matrix(a, ys), map_from_matrix(inv, ys))


def test_apply(xyz):
    f = cremona(xyz)
    assert apply_map(f, ProjectivePoint([1, 1, 1])) == ProjectivePoint([1, 1, 1])
    with pytest.raises(IndeterminatePointError):
        apply_map(f, ProjectivePoint([1, 0, 0]))
    p = ProjectivePoint([2, 3, 5])
    assert apply_map(identity_map(XYZ), p) == p


def test_apply_commutes_with_compose(xyz):
    rng = seeded(101)
    f = cremona(xyz)
    g = new_map([Form.variable(XYZ, "y"), Form.variable(XYZ, "x"), Form.variable(XYZ, "z")])
    fg = compose(f, g)
    for _ in range(10):
        p = ProjectivePoint([random_scalar(rng) for _ in range(3)])
        try:
            left = apply_map(fg, p)
            right = apply_map(f, apply_map(g, p))
        except IndeterminatePointError:
            continue
        assert left == right


def test_compose_associative_up_to_scalar(xyz):
    x, y, z = xyz
    f = cremona(xyz)
    g = new_map([y, x, z])
    h = new_map([x + y, y, z])
    lhs = compose(compose(f, g), h)
    rhs = compose(f, compose(g, h))
    assert normalized_components(lhs) == normalized_components(rhs)


def test_segre_embed():
    one = GaussianRational(1)
    p = ProjectivePoint([1, 0])
    assert segre_embed(p, p).normalized() == (one, one * 0, one * 0, one * 0)
    q = segre_embed(ProjectivePoint([1, 1]), ProjectivePoint([1, -1]))
    assert q.normalized() == (one, -one, one, -one)
    r = segre_embed(ProjectivePoint([0, 1]), ProjectivePoint([0, 1]))
    assert [str(c) for c in r.coordinates] == ["0", "0", "0", "1"]


def test_segre_rank_one_quadrics():
    rng = seeded(55)
    for _ in range(10):
        p = ProjectivePoint([random_scalar(rng) for _ in range(3)])
        q = ProjectivePoint([random_scalar(rng) for _ in range(3)])
        assert segre_embed(p, q).satisfies_rank_one_quadrics()


def test_graph_point(xyz):
    ys = ("y0", "y1")
    ident = identity_map(ys)
    gp = graph_point(ident, ProjectivePoint([1, 0]))
    assert [str(c) for c in gp.coordinates] == ["1", "0", "0", "0"]
    swap = new_map([Form.variable(ys, "y1"), Form.variable(ys, "y0")])
    gp2 = graph_point(swap, ProjectivePoint([1, 0]))
    assert [str(c) for c in gp2.coordinates] == ["0", "1", "0", "0"]
    f = cremona(xyz)
    gp3 = graph_point(f, ProjectivePoint([1, 1, 1]))
    assert all(str(c) == "1" for c in gp3.coordinates)


def test_degree_bound():
    assert segre_graph_degree_bound(1, 1) == 2
    assert segre_graph_degree_bound(2, 2) == 9
    assert segre_graph_degree_bound(3, 1) == 8
    with pytest.raises(ValueError):
        segre_graph_degree_bound(0, 1)
