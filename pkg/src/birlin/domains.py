"""Real-algebraic domain toolkit: defining polynomials, Segre varieties,
Levi forms, and injectivity evidence for the boundary-geometry hypotheses.

Conventions: a defining polynomial for a domain in C^n lives in 2n variables
z1..zn, c1..cn, where ci stands for the conjugate of zi.  Hermitian
coefficient symmetry guarantees real values on the diagonal ci = conj(zi),
so every evaluation below is exact with imaginary part identically zero.
"""

from fractions import Fraction

from .errors import ArityError, NotOnBoundary, NotRealValued, NotSmooth
from .field import GaussianRational, ZERO
from .forms import Form
from .linalg import nullspace, rank
from .textform import form_to_text


def z_variable(k):
    return f"z{k + 1}"


def conj_variable(k):
    return f"c{k + 1}"


def domain_variables(n):
    return tuple(z_variable(k) for k in range(n)) + tuple(
        conj_variable(k) for k in range(n)
    )


class RealDefiningPolynomial:
    """Polynomial r(z, conj z) with Hermitian coefficient symmetry."""

    __slots__ = ("n", "poly")

    def __init__(self, n, poly):
        if poly.variables != domain_variables(n):
            raise ArityError(
                f"expected variables {domain_variables(n)}, got {poly.variables}"
            )
        offender = _hermitian_offender(poly, n)
        if offender is not None:
            raise NotRealValued(
                "coefficient symmetry fails at exponent pair "
                f"{offender[0]} / {offender[1]}"
            )
        self.n = n
        self.poly = poly

    def __repr__(self):
        return f"RealDefiningPolynomial(n={self.n}, r={form_to_text(self.poly)})"


def _hermitian_offender(poly, n):
    """First exponent pair breaking coeff(z^a c^b) == conj(coeff(z^b c^a))."""
    for exps, coeff in poly.terms.items():
        alpha, beta = exps[:n], exps[n:]
        mirror = beta + alpha
        if poly.coefficient(mirror) != coeff.conjugate():
            return exps, mirror
    return None


def new_defining_poly(n, poly):
    return RealDefiningPolynomial(n, poly)


def _diagonal_values(r, point):
    coords = [GaussianRational.coerce(c) for c in point]
    if len(coords) != r.n:
        raise ArityError(f"point has {len(coords)} coordinates, expected {r.n}")
    values = {}
    for k, c in enumerate(coords):
        values[z_variable(k)] = c
        values[conj_variable(k)] = c.conjugate()
    return values


def evaluate_real(r, point):
    """Exact real value of r at (p, conj p); sign classifies the point."""
    value = r.poly.evaluate(_diagonal_values(r, point))
    assert value.is_real(), "Hermitian symmetry violated at evaluation"
    return value.re


def classify_point(r, point):
    value = evaluate_real(r, point)
    if value < 0:
        return "inside"
    if value == 0:
        return "boundary"
    return "outside"


def omega_variable(k):
    return f"w{k + 1}"


def complexify(r):
    """Rename the conjugate block c -> w; the zero set is the complexification.

    Returns (form in z1..zn, w1..wn, degenerate_flag); constant forms cut out
    an empty or full hypersurface and are flagged.
    """
    new_vars = tuple(z_variable(k) for k in range(r.n)) + tuple(
        omega_variable(k) for k in range(r.n)
    )
    form = r.poly.rename_variables(new_vars)
    return form, form.total_degree() <= 0


class SegreVarietyPoly:
    """Slice of the complexification at a fixed conjugated base point."""

    __slots__ = ("w", "poly", "degenerate")

    def __init__(self, w, poly):
        self.w = tuple(GaussianRational.coerce(c) for c in w)
        self.poly = poly
        self.degenerate = poly.total_degree() <= 0

    def contains(self, z):
        values = {z_variable(k): GaussianRational.coerce(c) for k, c in enumerate(z)}
        return self.poly.evaluate(values).is_zero()


def segre_variety(r, w):
    """Substitute the conjugated base point into the complexification."""
    w = [GaussianRational.coerce(c) for c in w]
    if len(w) != r.n:
        raise ArityError(f"point has {len(w)} coordinates, expected {r.n}")
    z_vars = tuple(z_variable(k) for k in range(r.n))
    terms = {}
    for exps, coeff in r.poly.terms.items():
        value = coeff
        for k in range(r.n):
            e = exps[r.n + k]
            if e:
                value = value * w[k].conjugate() ** e
        if value.is_zero():
            continue
        key = exps[: r.n]
        acc = terms.get(key)
        terms[key] = value if acc is None else acc + value
    return SegreVarietyPoly(w, Form(z_vars, terms))


def segre_symmetry_check(r, z0, w0):
    """(z0 in Q_{w0}, w0 in Q_{z0}); Hermitian symmetry forces agreement."""
    forward = segre_variety(r, w0).contains(z0)
    backward = segre_variety(r, z0).contains(w0)
    return forward, backward


def _normalized_coefficient_vector(poly, frame):
    vec = [poly.coefficient(m) for m in frame]
    for v in vec:
        if not v.is_zero():
            inv = v.inverse()
            return tuple(x * inv for x in vec)
    return None


def segre_injectivity_evidence(r, samples):
    """Sample-based evidence that the base point is determined by its variety.

    Distinct samples whose Segre polynomials agree up to scale are reported
    as collisions.  When r is jointly affine-linear in the conjugate block,
    the coefficient map is itself affine-linear in conj(w) and injectivity is
    decided exactly by a column rank computation.
    """
    report = {"collisions": [], "degenerate": [], "samples": len(samples)}
    varieties = [segre_variety(r, w) for w in samples]
    frame = sorted(
        {m for v in varieties for m in v.poly.terms},
        key=lambda e: (sum(e), e),
        reverse=True,
    )
    seen = {}
    for index, variety in enumerate(varieties):
        if variety.degenerate:
            report["degenerate"].append(index)
            continue
        vec = _normalized_coefficient_vector(variety.poly, frame)
        key = tuple((v.re, v.im) for v in vec)
        if key in seen:
            report["collisions"].append([seen[key], index])
        else:
            seen[key] = index
    conj_degree = max(
        (sum(exps[r.n :]) for exps in r.poly.terms), default=0
    )
    if conj_degree <= 1:
        columns = _linear_coefficient_columns(r)
        report["exact_linear_check"] = {
            "applicable": True,
            "injective": rank(columns) == r.n if columns else False,
        }
    else:
        report["exact_linear_check"] = {"applicable": False}
    report["ok"] = not report["collisions"]
    return report


def _linear_coefficient_columns(r):
    """Rows of the matrix mapping conj(w) to the Segre coefficient vector.

    Writing r = sum_k c_k * A_k(z) + B(z), column k is the coefficient vector
    of A_k over the z-monomials; full column rank n decides injectivity of
    the affine map conj(w) -> coefficients of Q_w.
    """
    z_frame = sorted(
        {exps[: r.n] for exps in r.poly.terms}, key=lambda e: (sum(e), e), reverse=True
    )
    grouped = {k: {} for k in range(r.n)}
    for exps, coeff in r.poly.terms.items():
        conj_part = exps[r.n :]
        weight = sum(conj_part)
        if weight == 0:
            continue
        k = conj_part.index(1)
        grouped[k][exps[: r.n]] = coeff
    return [
        [grouped[k].get(zm, ZERO) for k in range(r.n)] for zm in z_frame
    ]


class LeviFormReport:
    __slots__ = (
        "point",
        "gradient",
        "hessian",
        "tangent_basis",
        "restricted",
        "restricted_rank",
        "nondegenerate",
    )

    def __init__(self, point, gradient, hessian, tangent_basis, restricted, restricted_rank):
        self.point = point
        self.gradient = gradient
        self.hessian = hessian
        self.tangent_basis = tangent_basis
        self.restricted = restricted
        self.restricted_rank = restricted_rank
        self.nondegenerate = restricted_rank == len(point) - 1


def boundary_smooth_at(r, point):
    """dr != 0 at a boundary point, checked on both Wirtinger blocks."""
    if evaluate_real(r, point) != 0:
        raise NotOnBoundary(f"r is nonzero at {point}")
    values = _diagonal_values(r, point)
    for name in r.poly.variables:
        if not r.poly.partial(name).evaluate(values).is_zero():
            return True
    return False


def levi_form(r, point):
    """Gradient, complex Hessian, tangent restriction, and exact rank at p."""
    if evaluate_real(r, point) != 0:
        raise NotOnBoundary(f"r is nonzero at {point}")
    values = _diagonal_values(r, point)
    n = r.n
    gradient = [
        r.poly.partial(z_variable(k)).evaluate(values) for k in range(n)
    ]
    conj_gradient = [
        r.poly.partial(conj_variable(k)).evaluate(values) for k in range(n)
    ]
    if all(v.is_zero() for v in gradient) and all(v.is_zero() for v in conj_gradient):
        raise NotSmooth(f"all first-order partials vanish at {point}")
    hessian = [
        [
            r.poly.partial(z_variable(i)).partial(conj_variable(j)).evaluate(values)
            for j in range(n)
        ]
        for i in range(n)
    ]
    tangent_basis = nullspace([gradient])
    restricted = [
        [_levi_pairing(hessian, u, v) for v in tangent_basis] for u in tangent_basis
    ]
    restricted_rank = rank(restricted) if restricted else 0
    point = tuple(GaussianRational.coerce(c) for c in point)
    return LeviFormReport(point, gradient, hessian, tangent_basis, restricted, restricted_rank)


def _levi_pairing(hessian, u, v):
    total = ZERO
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            total = total + hessian[i][j] * ui * vj.conjugate()
    return total


def unit_ball(n):
    """r = z1*c1 + ... + zn*cn - 1, the standard exact fixture."""
    variables = domain_variables(n)
    poly = Form.constant(variables, Fraction(-1))
    for k in range(n):
        exps = [0] * (2 * n)
        exps[k] = 1
        exps[n + k] = 1
        poly = poly + Form.monomial(variables, exps, 1)
    return RealDefiningPolynomial(n, poly)
