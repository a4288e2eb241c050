"""Bihomogeneous forms over a split variable list and their tensor splitting."""

from .errors import DegreeError
from .forms import Form, _grlex_key


class BihomogeneousForm:
    """A form over x-block + y-block variables, homogeneous in each block.

    bidegree is (d_x, d_y); every term has x-degree exactly d_x and
    y-degree exactly d_y.  The zero form is accepted at any bidegree.
    """

    __slots__ = ("form", "x_variables", "y_variables", "bidegree")

    def __init__(self, form, x_variables, y_variables, bidegree=None):
        x_variables = tuple(x_variables)
        y_variables = tuple(y_variables)
        if form.variables != x_variables + y_variables:
            raise DegreeError("form variables must be x-block followed by y-block")
        nx = len(x_variables)
        xdegs = {sum(e[:nx]) for e in form.terms}
        ydegs = {sum(e[nx:]) for e in form.terms}
        if len(xdegs) > 1 or len(ydegs) > 1:
            raise DegreeError("form is not bihomogeneous")
        if form.terms:
            found = (xdegs.pop(), ydegs.pop())
            if bidegree is not None and tuple(bidegree) != found:
                raise DegreeError(f"declared bidegree {bidegree}, found {found}")
            bidegree = found
        elif bidegree is None:
            raise DegreeError("zero form needs an explicit bidegree")
        self.form = form
        self.x_variables = x_variables
        self.y_variables = y_variables
        self.bidegree = tuple(bidegree)

    def __eq__(self, other):
        if not isinstance(other, BihomogeneousForm):
            return NotImplemented
        return (
            self.form == other.form
            and self.x_variables == other.x_variables
            and self.y_variables == other.y_variables
        )

    def __repr__(self):
        return f"BihomogeneousForm({self.form!r}, bidegree={self.bidegree})"


def split_terms_by_x_monomial(bf):
    """Group terms by x-monomial: bf = sum of x^alpha * psi_alpha(y)."""
    nx = len(bf.x_variables)
    grouped = {}
    for exps, coeff in bf.form.terms.items():
        xe, ye = exps[:nx], exps[nx:]
        grouped.setdefault(xe, {})[ye] = coeff
    pairs = []
    for xe in sorted(grouped, key=_grlex_key, reverse=True):
        phi = Form.monomial(bf.x_variables, xe, 1)
        psi = Form(bf.y_variables, grouped[xe])
        pairs.append((phi, psi))
    return pairs


def bihomogeneous_decompose(bf):
    """Write bf as sum phi_i(x) * psi_i(y) with linearly independent psi_i.

    Terms are grouped by x-monomial first; when the grouped psi system is
    already independent the phi_i stay distinct x-monomials.  Otherwise each
    psi is rewritten against an independent sub-basis and the corresponding
    x-factors are merged, which preserves the reconstruction identity.
    """
    from .linalg import form_rank, express_in_basis, independent_subset

    pairs = split_terms_by_x_monomial(bf)
    if not pairs:
        return []
    psis = [psi for _, psi in pairs]
    if form_rank(psis) == len(psis):
        return pairs
    basis = independent_subset(psis)
    merged = [Form.zero(bf.x_variables) for _ in basis]
    for phi, psi in pairs:
        coords = express_in_basis(psi, basis)
        for k, c in enumerate(coords):
            if not c.is_zero():
                merged[k] = merged[k] + phi.scale(c)
    return list(zip(merged, basis))


def reconstruct(pairs, x_variables, y_variables):
    """Sum phi_i * psi_i back into a form over the joint variable list."""
    joint = tuple(x_variables) + tuple(y_variables)
    total = Form.zero(joint)
    for phi, psi in pairs:
        phi_j = _extend(phi, joint)
        psi_j = _extend(psi, joint)
        total = total + phi_j * psi_j
    return total


def _extend(form, joint):
    index = {name: k for k, name in enumerate(joint)}
    width = len(joint)
    terms = {}
    for exps, coeff in form.terms.items():
        new = [0] * width
        for name, e in zip(form.variables, exps):
            new[index[name]] = e
        terms[tuple(new)] = coeff
    return Form(joint, terms)
