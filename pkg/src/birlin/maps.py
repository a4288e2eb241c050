"""Rational self-maps of projective space as primitive homogeneous tuples."""

from .errors import (
    ArityError,
    DegenerateCompositionError,
    DegreeError,
    IndeterminatePointError,
    ZeroInputError,
)
from .field import GaussianRational, ZERO, ONE
from .forms import Form, ZERO_DEGREE, divide_exact
from .gcd import gcd_many


class ProjectivePoint:
    """Point of P^n; equality compares the normalized representative."""

    __slots__ = ("coordinates",)

    def __init__(self, coordinates):
        coords = [GaussianRational.coerce(c) for c in coordinates]
        if all(c.is_zero() for c in coords):
            raise ZeroInputError("projective point needs a nonzero coordinate")
        self.coordinates = tuple(coords)

    def normalized(self):
        """Scale so the first nonzero coordinate is 1."""
        for c in self.coordinates:
            if not c.is_zero():
                inv = c.inverse()
                return tuple(v * inv for v in self.coordinates)
        raise AssertionError("unreachable: zero point")

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __len__(self):
        return len(self.coordinates)

    def __repr__(self):
        return "ProjectivePoint([" + ", ".join(str(c) for c in self.coordinates) + "])"


class SegrePoint:
    """Image of (p, q) under [z_i w_j]; rank one as an (n+1)x(n+1) matrix."""

    __slots__ = ("coordinates", "size")

    def __init__(self, coordinates, size):
        coords = [GaussianRational.coerce(c) for c in coordinates]
        if len(coords) != size * size:
            raise ArityError(f"expected {size * size} coordinates")
        if all(c.is_zero() for c in coords):
            raise ZeroInputError("Segre point needs a nonzero coordinate")
        self.coordinates = tuple(coords)
        self.size = size

    def entry(self, i, j):
        return self.coordinates[i * self.size + j]

    def satisfies_rank_one_quadrics(self):
        n = self.size
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        if self.entry(i, j) * self.entry(k, l) != self.entry(i, l) * self.entry(k, j):
                            return False
        return True

    def normalized(self):
        for c in self.coordinates:
            if not c.is_zero():
                inv = c.inverse()
                return tuple(v * inv for v in self.coordinates)
        raise AssertionError("unreachable: zero point")

    def __eq__(self, other):
        if not isinstance(other, SegrePoint):
            return NotImplemented
        return self.size == other.size and self.normalized() == other.normalized()


class BirationalMap:
    """Primitive tuple of n+1 equal-degree forms in n+1 variables.

    The certified inverse is a write-once field set by verify_inverse.
    """

    __slots__ = ("components", "variables", "degree", "_inverse")

    def __init__(self, components, variables, degree):
        self.components = tuple(components)
        self.variables = tuple(variables)
        self.degree = degree
        self._inverse = None

    @property
    def inverse(self):
        return self._inverse

    @property
    def dimension(self):
        return len(self.variables) - 1

    def __eq__(self, other):
        if not isinstance(other, BirationalMap):
            return NotImplemented
        return normalized_components(self) == normalized_components(other)

    def __repr__(self):
        return f"BirationalMap(degree={self.degree}, components={list(self.components)})"


def normalized_components(f):
    """Components scaled so the overall graded-lex leading coefficient is 1."""
    for c in f.components:
        if not c.is_zero():
            lead = c.leading_coefficient()
            inv = lead.inverse()
            return tuple(comp.scale(inv) for comp in f.components)
    raise AssertionError("unreachable: zero map")


def new_map(components):
    """Build the primitive representative of a homogeneous tuple."""
    components = list(components)
    if not components:
        raise ArityError("no components")
    variables = components[0].variables
    n_plus_1 = len(variables)
    if len(components) != n_plus_1:
        raise ArityError(
            f"{len(components)} components over {n_plus_1} variables; need {n_plus_1}"
        )
    if all(c.is_zero() for c in components):
        raise ZeroInputError("all components are zero")
    degrees = set()
    for c in components:
        if c.variables != variables:
            raise ArityError("components use different variable lists")
        h = c.homogeneity()
        if h is None:
            raise DegreeError("component is not homogeneous")
        if h != ZERO_DEGREE:
            degrees.add(h)
    if len(degrees) != 1:
        raise DegreeError(f"components have unequal degrees {sorted(degrees)}")
    common = gcd_many(components)
    if common.total_degree() > 0:
        reduced = []
        for c in components:
            if c.is_zero():
                reduced.append(c)
            else:
                q = divide_exact(c, common)
                assert q is not None
                reduced.append(q)
        components = reduced
    degree = max(
        (c.total_degree() for c in components if not c.is_zero()), default=0
    )
    return BirationalMap(components, variables, degree)


def identity_map(variables):
    variables = tuple(variables)
    return new_map([Form.variable(variables, name) for name in variables])


def map_from_matrix(matrix, variables):
    """Degree-1 map whose i-th component is sum_j matrix[i][j] * x_j."""
    variables = tuple(variables)
    components = []
    for row in matrix:
        f = Form.zero(variables)
        for j, entry in enumerate(row):
            f = f + Form.variable(variables, variables[j]).scale(entry)
        components.append(f)
    return new_map(components)


def compose(f, g):
    """f after g, reduced to the primitive representative."""
    if f.variables != g.variables:
        raise ArityError("maps live on different ambient spaces")
    assignment = dict(zip(f.variables, g.components))
    raw = [c.substitute(assignment) for c in f.components]
    if all(r.is_zero() for r in raw):
        raise DegenerateCompositionError(
            "composition is identically zero (base locus swallows the image)"
        )
    return new_map(raw)


def is_identity_up_to_scalar(f):
    if f.degree != 1:
        return False
    return normalized_components(f) == normalized_components(identity_map(f.variables))


def verify_inverse(f, g):
    """Check f and g invert each other; certify both on success."""
    if f.variables != g.variables:
        raise ArityError("maps live on different ambient spaces")
    try:
        ok = is_identity_up_to_scalar(compose(f, g)) and is_identity_up_to_scalar(
            compose(g, f)
        )
    except DegenerateCompositionError:
        return False
    if ok:
        f._inverse = g
        g._inverse = f
    return ok


def apply_map(f, point):
    values = dict(zip(f.variables, point.coordinates))
    image = [c.evaluate(values) for c in f.components]
    if all(v.is_zero() for v in image):
        raise IndeterminatePointError(f"all components vanish at {point!r}")
    return ProjectivePoint(image)


def segre_embed(p, q):
    if len(p) != len(q):
        raise ArityError("points live in different projective spaces")
    coords = [zi * wj for zi in p.coordinates for wj in q.coordinates]
    return SegrePoint(coords, len(p))


def graph_point(f, p):
    return segre_embed(p, apply_map(f, p))


def segre_graph_degree_bound(n, d):
    """Closed-form Bezout bound (1+d)^n for the Segre-embedded graph closure."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return (1 + d) ** n
