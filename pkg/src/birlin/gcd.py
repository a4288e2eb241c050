"""Exact multivariate gcd over the Gaussian rationals.

Recursion on the last occurring variable via content / primitive part, with
subresultant polynomial remainder sequences keeping intermediate coefficient
growth polynomially bounded.  Results are normalized so the graded-lex
leading coefficient is 1, which makes gcds unique.

Coefficient blow-up is still exponential in the worst case; callers working
at desk scale (the intended regime) cap input sizes upstream.
"""

from .errors import ZeroInputError
from .forms import Form, divide_exact


def gcd(p, q):
    """Normalized greatest common divisor; gcd(p, 0) = normalized p."""
    p._check(q)
    if p.is_zero() and q.is_zero():
        raise ZeroInputError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    return _gcd(p, q).normalized()


def gcd_many(forms):
    """Fold of gcd over a non-empty, not-all-zero list."""
    forms = list(forms)
    if not forms:
        raise ZeroInputError("gcd_many of an empty list")
    if all(f.is_zero() for f in forms):
        raise ZeroInputError("gcd_many of an all-zero list")
    acc = None
    for f in forms:
        if f.is_zero():
            continue
        acc = f if acc is None else _gcd(acc, f)
        if acc.total_degree() == 0:
            break
    return acc.normalized()


def _gcd(p, q):
    support = p.support() | q.support()
    if not support:
        return Form.one(p.variables)
    v = max(support)
    cp, pp = _content_and_primitive(p, v)
    cq, pq = _content_and_primitive(q, v)
    content = _gcd(cp, cq) if (cp.total_degree() > 0 or cq.total_degree() > 0) else Form.one(p.variables)
    prim = _subresultant_gcd(pp, pq, v)
    return content * prim


def _coefficients_in(p, v):
    """View p as univariate in variable index v: {degree: coefficient form}."""
    coeffs = {}
    for exps, coeff in p.terms.items():
        e = exps[v]
        stripped = list(exps)
        stripped[v] = 0
        bucket = coeffs.setdefault(e, {})
        key = tuple(stripped)
        bucket[key] = bucket.get(key, coeff * 0) + coeff
    return {e: Form(p.variables, terms) for e, terms in coeffs.items()}


def _content_and_primitive(p, v):
    coeffs = _coefficients_in(p, v)
    forms = [coeffs[e] for e in sorted(coeffs)]
    if len(forms) == 1 and p.degree_in(v) == 0:
        return p, Form.one(p.variables)
    nonzero = [f for f in forms if not f.is_zero()]
    if len(nonzero) == 1:
        content = nonzero[0].normalized()
    else:
        content = gcd_many(nonzero)
    primitive = divide_exact(p, content)
    assert primitive is not None
    return content, primitive


def _degree_in(p, v):
    return p.degree_in(v)


def _leading_coeff_in(p, v):
    d = p.degree_in(v)
    return _coefficients_in(p, v).get(d, Form.zero(p.variables))


def _var_power(p_variables, v, e):
    exps = [0] * len(p_variables)
    exps[v] = e
    return Form.monomial(p_variables, exps, 1)


def _pseudo_remainder(a, b, v):
    """prem(a, b) in variable v: lc(b)^(da-db+1) * a reduced mod b."""
    da, db = a.degree_in(v), b.degree_in(v)
    lc_b = _leading_coeff_in(b, v)
    r = a
    k = da - db + 1
    while not r.is_zero() and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lc_r = _leading_coeff_in(r, v)
        r = lc_b * r - lc_r * _var_power(a.variables, v, dr - db) * b
        k -= 1
    if k > 0:
        r = (lc_b ** k) * r
    return r


def _subresultant_gcd(a, b, v):
    """gcd of v-primitive inputs, returned v-primitive and normalized."""
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    if b.degree_in(v) == 0:
        # b is v-free and primitive, hence a unit times 1
        return Form.one(a.variables)
    one = Form.one(a.variables)
    g, h = one, one
    while True:
        d = a.degree_in(v) - b.degree_in(v)
        r = _pseudo_remainder(a, b, v)
        if r.is_zero():
            break
        if r.degree_in(v) == 0:
            return one
        denom = g * (h ** d)
        a, b = b, divide_exact(r, denom)
        assert b is not None
        g = _leading_coeff_in(a, v)
        if d > 0:
            h = divide_exact(g ** d, h ** (d - 1)) if d > 1 else g
            assert h is not None
    _, primitive = _content_and_primitive(b, v)
    return primitive.normalized()
