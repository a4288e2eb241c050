"""Invariant form spaces, representation solving, and linearization certificates.

The central identity, checked coefficient-exactly everywhere it appears:

    basis_j composed with the map  =  cofactor * sum_k M[j][k] * basis_k
"""

from .bihom import BihomogeneousForm, bihomogeneous_decompose, _extend
from .errors import (
    ArityError,
    DegenerateParameterError,
    DegreeError,
    DimCapExceeded,
    NotClosedAtDegree,
    NotInSpan,
    ZeroInputError,
)
from .field import GaussianRational, ZERO, ONE
from .forms import Form, ZERO_DEGREE, divide_exact
from .gcd import gcd_many
from .linalg import (
    express_in_basis,
    mat_inverse,
    mat_mul,
    mat_vec,
    monomial_frame,
    proportionality_scalar,
    rank,
    rref_forms,
)
from .maps import (
    BirationalMap,
    IndeterminatePointError,
    apply_map,
    compose,
    new_map,
)


class FormSpace:
    """Span of linearly independent homogeneous forms of one degree.

    The stored basis is always the reduced-row-echelon basis over the
    degree-m monomials in graded-lex order, so equal spans compare equal.
    """

    __slots__ = ("variables", "degree", "basis")

    def __init__(self, variables, degree, basis, already_reduced=False):
        variables = tuple(variables)
        basis = list(basis)
        if not basis:
            raise ZeroInputError("form space needs at least one basis element")
        for f in basis:
            if f.variables != variables:
                raise ArityError("basis element over a different variable list")
            if not f.is_homogeneous_of_degree(degree) or f.is_zero():
                raise DegreeError(f"basis element not homogeneous of degree {degree}")
        if not already_reduced:
            basis = rref_forms(basis)
        self.variables = variables
        self.degree = degree
        self.basis = tuple(basis)

    @property
    def dimension(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, FormSpace):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.degree == other.degree
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"FormSpace(degree={self.degree}, dimension={self.dimension})"


def monomial_space(variables, degree):
    """All monomials of the given degree, a canonical seed choice."""
    variables = tuple(variables)
    seeds = [
        Form.monomial(variables, exps, 1)
        for exps in _exponents_of_degree(len(variables), degree)
    ]
    return seeds


def _exponents_of_degree(width, degree):
    if width == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in _exponents_of_degree(width - 1, degree - head):
            yield (head,) + tail


def reduced_pullback_system(space, g):
    """Pull the basis back through g and strip the common cofactor.

    Returns (cofactor, images) with basis_j(g) = cofactor * images_j exactly;
    the cofactor is the gcd across the whole system, never per element.
    """
    if space.variables != g.variables:
        raise ArityError("space and map live on different ambient spaces")
    assignment = dict(zip(g.variables, g.components))
    raws = []
    for j, p in enumerate(space.basis):
        raw = p.substitute(assignment)
        if raw.is_zero():
            raise ZeroInputError(
                f"pullback of basis element {j} is identically zero (base locus collision)"
            )
        raws.append(raw)
    cofactor = gcd_many(raws)
    if cofactor.total_degree() == 0:
        return cofactor, raws
    images = []
    for raw in raws:
        q = divide_exact(raw, cofactor)
        assert q is not None
        images.append(q)
    return cofactor, images


def _pullback_at_degree(space, g):
    """Cofactor and images with the cofactor degree forced by the identity.

    A degree-preserving pullback needs deg(cofactor) = m*(deg g - 1).  The
    system gcd is used when it has exactly that degree; a gcd that is too
    small means the images overshoot degree m, and a gcd that is too large
    can only be repaired when the forced degree is 0 (no reduction needed).
    Both irreparable cases raise NotClosedAtDegree.
    """
    m = space.degree
    cofactor, images = reduced_pullback_system(space, g)
    forced = m * (g.degree - 1)
    found = cofactor.total_degree()
    if found == forced:
        return cofactor, images
    if found > forced:
        if forced == 0:
            assignment = dict(zip(g.variables, g.components))
            return Form.one(space.variables), [
                p.substitute(assignment) for p in space.basis
            ]
        raise NotClosedAtDegree(
            f"system gcd has degree {found}, exceeding the forced cofactor "
            f"degree {forced}; the span has an unsplittable common divisor",
            degree=m,
        )
    raise NotClosedAtDegree(
        f"reduced pullback has degree {m * g.degree - found}, not {m}",
        degree=m,
    )


def _closure_operators(generators):
    ops = []
    for g in generators:
        ops.append(g)
        if g.inverse is not None:
            ops.append(g.inverse)
    return ops


def invariant_closure(seeds, generators, dim_cap):
    """Smallest degree-preserving pullback-invariant space containing the seeds.

    Iterates reduced pullbacks by every generator and certified inverse,
    growing the span until a fixpoint.  Raises NotClosedAtDegree as soon as
    some reduced image leaves degree m, DimCapExceeded past the cap.
    """
    seeds = list(seeds)
    if not seeds:
        raise ZeroInputError("no seed forms")
    variables = seeds[0].variables
    degrees = {f.homogeneity() for f in seeds if not f.is_zero()}
    if not degrees:
        raise ZeroInputError("seeds span the zero space")
    if len(degrees) != 1 or None in degrees:
        raise DegreeError("seeds must be homogeneous of one common degree")
    m = degrees.pop()
    basis = rref_forms(seeds)
    if not basis:
        raise ZeroInputError("seeds span the zero space")
    if len(basis) > dim_cap:
        raise DimCapExceeded(f"seed span has dimension {len(basis)} > cap {dim_cap}")
    ops = _closure_operators(generators)
    changed = True
    while changed:
        changed = False
        space = FormSpace(variables, m, basis, already_reduced=True)
        for g in ops:
            _, images = _pullback_at_degree(space, g)
            new_basis = rref_forms(list(basis) + images)
            if len(new_basis) > len(basis):
                if len(new_basis) > dim_cap:
                    raise DimCapExceeded(
                        f"closure reached dimension {len(new_basis)} > cap {dim_cap}"
                    )
                basis = new_basis
                changed = True
    return FormSpace(variables, m, basis, already_reduced=True)


def solve_representation(space, g):
    """Matrix and cofactor with basis_j(g) = cofactor * (M basis)_j exactly.

    The matrix is scaled so its first nonzero entry in row-major order is 1;
    the cofactor absorbs the complementary scalar.
    """
    cofactor, images = _pullback_at_degree(space, g)
    frame = monomial_frame(list(space.basis) + images)
    matrix = []
    for j, image in enumerate(images):
        coords = express_in_basis(image, space.basis, frame)
        if coords is None:
            raise NotInSpan(f"pullback image of basis element {j} is outside the span")
        matrix.append(coords)
    lam = None
    for row in matrix:
        for entry in row:
            if not entry.is_zero():
                lam = entry
                break
        if lam is not None:
            break
    assert lam is not None
    inv = lam.inverse()
    matrix = [[entry * inv for entry in row] for row in matrix]
    cofactor = cofactor.scale(lam)
    return matrix, cofactor


class CertificateEntry:
    __slots__ = ("map", "matrix", "cofactor")

    def __init__(self, map, matrix, cofactor):
        self.map = map
        self.matrix = matrix
        self.cofactor = cofactor


class LinearizationCertificate:
    """Basis plus per-generator matrices and cofactors; identity holds exactly."""

    __slots__ = ("space", "entries")

    def __init__(self, space, entries):
        self.space = space
        self.entries = list(entries)

    @property
    def dimension(self):
        return self.space.dimension


def certificate_identity_failures(cert):
    """All exact-identity violations: (generator, basis index, monomial) triples.

    Also reports singular matrices as (generator, None, 'singular matrix').
    """
    failures = []
    for g_index, entry in enumerate(cert.entries):
        if mat_inverse(entry.matrix) is None:
            failures.append((g_index, None, "singular matrix"))
        assignment = dict(zip(entry.map.variables, entry.map.components))
        for j, p in enumerate(cert.space.basis):
            lhs = p.substitute(assignment)
            rhs = Form.zero(cert.space.variables)
            for k, q in enumerate(cert.space.basis):
                c = entry.matrix[j][k]
                if not c.is_zero():
                    rhs = rhs + q.scale(c)
            rhs = entry.cofactor * rhs
            diff = lhs - rhs
            if not diff.is_zero():
                failures.append((g_index, j, diff.leading_exponents()))
    return failures


def build_certificate(seeds, generators, m, dim_cap):
    """Run closure then per-generator solves; re-verify before returning."""
    seeds = list(seeds)
    for f in seeds:
        if not f.is_homogeneous_of_degree(m):
            raise DegreeError(f"seed not homogeneous of degree {m}")
    space = invariant_closure(seeds, generators, dim_cap)
    entries = []
    for g in generators:
        matrix, cofactor = solve_representation(space, g)
        entries.append(CertificateEntry(g, matrix, cofactor))
    cert = LinearizationCertificate(space, entries)
    failures = certificate_identity_failures(cert)
    if failures:
        raise NotInSpan(f"internal error: certificate identity failed: {failures[0]}")
    return cert


def check_group_law(cert, words):
    """Projective multiplicativity: product of letter matrices vs a fresh solve.

    Words are lists of 1-based signed generator indices (-k means the
    certified inverse of generator k).  Returns one report entry per word
    with the proportionality scalar, or a violation marker.
    """
    report = []
    for word in words:
        maps = []
        matrices = []
        for letter in word:
            if letter == 0 or abs(letter) > len(cert.entries):
                raise ArityError(f"letter {letter} out of range")
            entry = cert.entries[abs(letter) - 1]
            if letter > 0:
                g = entry.map
                matrices.append(entry.matrix)
            else:
                g = entry.map.inverse
                if g is None:
                    raise ArityError(
                        f"generator {abs(letter)} has no certified inverse"
                    )
                matrix, _ = solve_representation(cert.space, g)
                matrices.append(matrix)
            maps.append(g)
        composed = maps[0]
        for g in maps[1:]:
            composed = compose(composed, g)
        product = matrices[0]
        for matrix in matrices[1:]:
            product = mat_mul(product, matrix)
        try:
            fresh, _ = solve_representation(cert.space, composed)
        except (NotClosedAtDegree, NotInSpan) as exc:
            report.append({"word": list(word), "ok": False, "reason": str(exc)})
            continue
        lam = proportionality_scalar(product, fresh)
        if lam is None:
            report.append(
                {"word": list(word), "ok": False, "reason": "matrices not proportional"}
            )
        else:
            report.append({"word": list(word), "ok": True, "scalar": lam})
    return report


def verify_equivariance(cert, samples):
    """Sample-wise projective equality of embed-then-act vs act-then-embed.

    Samples where the cofactor vanishes, every basis form vanishes, or the
    map is indeterminate are skipped with a reason.  A violation entry means
    the certificate is corrupt.
    """
    report = []
    for g_index, entry in enumerate(cert.entries):
        for s_index, point in enumerate(samples):
            values = dict(zip(cert.space.variables, point.coordinates))
            record = {"generator": g_index, "sample": s_index}
            c_value = entry.cofactor.evaluate(values)
            if c_value.is_zero():
                record.update(status="skipped", reason="cofactor vanishes")
                report.append(record)
                continue
            embedded = [p.evaluate(values) for p in cert.space.basis]
            if all(v.is_zero() for v in embedded):
                record.update(status="skipped", reason="base point of the basis")
                report.append(record)
                continue
            try:
                image_point = apply_map(entry.map, point)
            except IndeterminatePointError:
                record.update(status="skipped", reason="indeterminate point")
                report.append(record)
                continue
            image_values = dict(zip(cert.space.variables, image_point.coordinates))
            lhs = [p.evaluate(image_values) for p in cert.space.basis]
            rhs = mat_vec(entry.matrix, embedded)
            if _projectively_equal(lhs, rhs):
                record.update(status="ok")
            else:
                record.update(status="violation", reason="projective equality fails")
            report.append(record)
    return report


def _projectively_equal(a, b):
    lam = None
    for x, y in zip(a, b):
        if x.is_zero() != y.is_zero():
            return False
        if y.is_zero():
            continue
        ratio = x / y
        if lam is None:
            lam = ratio
        elif lam != ratio:
            return False
    return lam is not None


def base_point_evidence(space, samples):
    """Necessary-condition checks for the basis to embed off its base locus.

    Checks: trivial common divisor, non-vanishing at each sample, Jacobian
    rank >= 1 at each sample, and pairwise separation of the sample images.
    """
    report = {"checks": [], "failures": []}
    common = gcd_many(list(space.basis))
    if common.total_degree() == 0:
        report["checks"].append({"check": "gcd_trivial", "ok": True})
    else:
        report["checks"].append({"check": "gcd_trivial", "ok": False})
        report["failures"].append({"check": "gcd_trivial"})
    images = {}
    for s_index, point in enumerate(samples):
        values = dict(zip(space.variables, point.coordinates))
        vec = [p.evaluate(values) for p in space.basis]
        if all(v.is_zero() for v in vec):
            report["failures"].append(
                {"check": "nonvanishing", "sample": s_index, "reason": "all basis forms vanish"}
            )
            continue
        jac = [
            [p.partial(name).evaluate(values) for name in space.variables]
            for p in space.basis
        ]
        if rank(jac) < 1:
            report["failures"].append(
                {"check": "jacobian_rank", "sample": s_index, "reason": "Jacobian rank 0"}
            )
        images[s_index] = _normalize_vector(vec)
    seen = {}
    for s_index, vec in images.items():
        key = tuple((v.re, v.im) for v in vec)
        sample_key = samples[s_index].normalized()
        if key in seen and seen[key][1] != sample_key:
            report["failures"].append(
                {
                    "check": "separation",
                    "samples": [seen[key][0], s_index],
                    "reason": "distinct samples map to the same image point",
                }
            )
        else:
            seen[key] = (s_index, sample_key)
    report["ok"] = not report["failures"]
    return report


def _normalize_vector(vec):
    for v in vec:
        if not v.is_zero():
            inv = v.inverse()
            return [x * inv for x in vec]
    raise AssertionError("unreachable: zero vector")


class RationalFamily:
    """n+1 bihomogeneous components over parameter block x and point block y."""

    __slots__ = ("x_variables", "y_variables", "components", "bidegree")

    def __init__(self, components):
        components = list(components)
        if not components:
            raise ArityError("no components")
        first = components[0]
        x_vars, y_vars = first.x_variables, first.y_variables
        if len(components) != len(y_vars):
            raise ArityError(
                f"{len(components)} components for {len(y_vars)} point variables"
            )
        bidegrees = set()
        all_zero = True
        for c in components:
            if (c.x_variables, c.y_variables) != (x_vars, y_vars):
                raise ArityError("components use different variable blocks")
            if not c.form.is_zero():
                all_zero = False
                bidegrees.add(c.bidegree)
        if all_zero:
            raise ZeroInputError("all family components are zero")
        if len(bidegrees) != 1:
            raise DegreeError(f"components have unequal bidegrees {sorted(bidegrees)}")
        self.x_variables = x_vars
        self.y_variables = y_vars
        self.components = tuple(components)
        self.bidegree = bidegrees.pop()


def family_decompose(family, h):
    """Substitute the family into h, split tensor-wise, span the y-factors."""
    m = h.homogeneity()
    if m is None or m == ZERO_DEGREE:
        raise DegreeError("h must be nonzero homogeneous")
    if h.variables != family.y_variables:
        raise ArityError("h must live on the family's point variables")
    joint = family.x_variables + family.y_variables
    assignment = {
        name: c.form for name, c in zip(family.y_variables, family.components)
    }
    composed = h.substitute(assignment)
    if composed.is_zero():
        raise ZeroInputError("substitution of the family into h is identically zero")
    dx, dy = family.bidegree
    bf = BihomogeneousForm(composed, family.x_variables, family.y_variables, (m * dx, m * dy))
    pairs = bihomogeneous_decompose(bf)
    space = FormSpace(family.y_variables, m * dy, [psi for _, psi in pairs])
    return pairs, space


def specialize_family(family, parameter_point):
    """Freeze the parameter block at a point and reduce to a primitive map."""
    coords = [GaussianRational.coerce(c) for c in parameter_point]
    if len(coords) != len(family.x_variables):
        raise ArityError(
            f"{len(coords)} coordinates for {len(family.x_variables)} parameters"
        )
    nx = len(family.x_variables)
    specialized = []
    for c in family.components:
        terms = {}
        for exps, coeff in c.form.terms.items():
            value = coeff
            for k in range(nx):
                if exps[k]:
                    value = value * coords[k] ** exps[k]
            if value.is_zero():
                continue
            key = exps[nx:]
            acc = terms.get(key)
            terms[key] = value if acc is None else acc + value
        specialized.append(Form(family.y_variables, terms))
    if all(f.is_zero() for f in specialized):
        raise DegenerateParameterError("all components vanish at this parameter")
    return new_map(specialized)
