"""Exact linear algebra over the Gaussian rationals.

Matrices are plain lists of lists of GaussianRational.  Everything is
fraction-free in spirit but runs over the field, so no pivot scaling issues
arise; all results are exact.
"""

from .field import GaussianRational, ZERO, ONE
from .forms import Form, _grlex_key


def _clone(matrix):
    return [list(row) for row in matrix]


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = _clone(matrix)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, len(rows)):
            if not rows[k][c].is_zero():
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and not rows[k][c].is_zero():
                factor = rows[k][c]
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix):
    """Basis of the right null space, one vector per free column."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][f]
        basis.append(vec)
    return basis


def solve(matrix, rhs):
    """One exact solution of A x = b, or None if inconsistent."""
    if not matrix:
        return None if any(not v.is_zero() for v in rhs) else []
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return x


def identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ZERO
            for t in range(k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum((row[k] * v[k] for k in range(len(v))), ZERO) for row in a]


def mat_inverse(matrix):
    """Exact inverse, or None when singular."""
    n = len(matrix)
    augmented = [list(row) + list(idrow) for row, idrow in zip(matrix, identity_matrix(n))]
    rows, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in rows[:n]]


def is_scalar_multiple_of_identity(matrix):
    """Return the scalar lam with M = lam*I, or None."""
    n = len(matrix)
    lam = matrix[0][0]
    for i in range(n):
        for j in range(n):
            expect = lam if i == j else ZERO
            if matrix[i][j] != expect:
                return None
    return None if lam.is_zero() else lam


def proportionality_scalar(a, b):
    """lam with a = lam*b entrywise (flattened), or None; b must be nonzero."""
    flat_a = [v for row in a for v in row]
    flat_b = [v for row in b for v in row]
    lam = None
    for x, y in zip(flat_a, flat_b):
        if y.is_zero():
            if not x.is_zero():
                return None
            continue
        ratio = x / y
        if lam is None:
            lam = ratio
        elif lam != ratio:
            return None
    if lam is None or lam.is_zero():
        return None
    return lam


# -- forms as vectors ---------------------------------------------------------


def monomial_frame(forms):
    """Shared monomial coordinate frame, descending graded-lex."""
    monomials = set()
    for f in forms:
        monomials.update(f.terms)
    return sorted(monomials, key=_grlex_key, reverse=True)


def forms_to_matrix(forms, frame=None):
    if frame is None:
        frame = monomial_frame(forms)
    return [[f.coefficient(m) for m in frame] for f in forms], frame


def form_rank(forms):
    matrix, _ = forms_to_matrix(forms)
    return rank(matrix)


def independent_subset(forms):
    """First maximal independent subset in the given order."""
    frame = monomial_frame(forms)
    chosen = []
    rows = []
    current_rank = 0
    for f in forms:
        if f.is_zero():
            continue
        rows.append([f.coefficient(m) for m in frame])
        new_rank = rank(rows)
        if new_rank > current_rank:
            chosen.append(f)
            current_rank = new_rank
        else:
            rows.pop()
    return chosen


def express_in_basis(form, basis, frame=None):
    """Coordinates of form in the basis, or None when outside the span."""
    if frame is None:
        frame = monomial_frame(list(basis) + [form])
    matrix = [[b.coefficient(m) for b in basis] for m in frame]
    rhs = [form.coefficient(m) for m in frame]
    return solve(matrix, rhs)


def rref_forms(forms):
    """Reduced-row-echelon basis of the span, as forms over the joint frame."""
    live = [f for f in forms if not f.is_zero()]
    if not live:
        return []
    matrix, frame = forms_to_matrix(live)
    rows, pivots = rref(matrix)
    variables = live[0].variables
    basis = []
    for row in rows[: len(pivots)]:
        terms = {m: c for m, c in zip(frame, row) if not c.is_zero()}
        basis.append(Form(variables, terms))
    return basis
