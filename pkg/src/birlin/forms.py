"""Sparse multivariate forms over the Gaussian rationals.

A Form is immutable: a fixed ordered variable list plus a map from exponent
tuples to nonzero GaussianRational coefficients.  The monomial order used
everywhere (leading terms, normalization, printing) is graded lexicographic
over the declared variable order.
"""

from fractions import Fraction

from .errors import (
    DegreeError,
    MissingAssignmentError,
    VariableMismatchError,
    ZeroInputError,
)
from .field import GaussianRational

# Degree report for the zero form: homogeneous of every degree.
ZERO_DEGREE = "zero"


def _grlex_key(exps):
    return (sum(exps), exps)


class Form:
    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        clean = {}
        width = len(self.variables)
        for exps, coeff in terms.items():
            coeff = GaussianRational.coerce(coeff)
            if coeff.is_zero():
                continue
            exps = tuple(exps)
            if len(exps) != width:
                raise VariableMismatchError(
                    f"exponent tuple of length {len(exps)} over {width} variables"
                )
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            clean[exps] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): GaussianRational.coerce(value)})

    @classmethod
    def one(cls, variables):
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        idx = variables.index(name)
        exps = tuple(1 if k == idx else 0 for k in range(len(variables)))
        return cls(variables, {exps: GaussianRational(1)})

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        return cls(variables, {tuple(exps): GaussianRational.coerce(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        """Maximal term degree; -1 for the zero form."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneity(self):
        """Common degree of all terms, ZERO_DEGREE for 0, None if mixed."""
        if not self.terms:
            return ZERO_DEGREE
        degrees = {sum(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous_of_degree(self, m):
        h = self.homogeneity()
        return h == ZERO_DEGREE or h == m

    def leading_exponents(self):
        if not self.terms:
            raise ZeroInputError("zero form has no leading term")
        return max(self.terms, key=_grlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_exponents()]

    def coefficient(self, exps):
        from .field import ZERO

        return self.terms.get(tuple(exps), ZERO)

    def constant_value(self):
        """Value of a degree-0 form; raises if any variable appears."""
        if not self.terms:
            return GaussianRational(0)
        if self.total_degree() > 0:
            raise DegreeError("form is not constant")
        return next(iter(self.terms.values()))

    def support(self):
        """Indices of variables that actually occur."""
        used = set()
        for exps in self.terms:
            for k, e in enumerate(exps):
                if e:
                    used.add(k)
        return used

    def degree_in(self, index):
        if not self.terms:
            return -1
        return max(e[index] for e in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps)
            terms[exps] = coeff if acc is None else acc + coeff
        return Form(self.variables, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Form(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(exps)
                terms[exps] = c if acc is None else acc + c
        return Form(self.variables, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar):
        scalar = GaussianRational.coerce(scalar)
        if scalar.is_zero():
            return Form.zero(self.variables)
        return Form(self.variables, {e: c * scalar for e, c in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Form.one(self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        from .textform import form_to_text

        return f"Form({form_to_text(self)!r})"

    # -- structural operations ---------------------------------------------

    def normalized(self):
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.leading_coefficient().inverse())

    def conjugate_coefficients(self):
        return Form(
            self.variables, {e: c.conjugate() for e, c in self.terms.items()}
        )

    def rename_variables(self, new_variables):
        new_variables = tuple(new_variables)
        if len(new_variables) != len(self.variables):
            raise VariableMismatchError("renaming must preserve arity")
        return Form(new_variables, dict(self.terms))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def partial(self, name):
        """Formal (Wirtinger) partial derivative with respect to one variable."""
        if name not in self.variables:
            raise VariableMismatchError(f"unknown variable {name!r}")
        idx = self.variables.index(name)
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e == 0:
                continue
            new = list(exps)
            new[idx] = e - 1
            terms[tuple(new)] = coeff * e
        return Form(self.variables, terms)

    def substitute(self, assignment):
        """Exact composition: replace every variable by its image form.

        All images must share one common variable list.
        """
        images = []
        target_vars = None
        for name in self.variables:
            if name not in assignment:
                raise MissingAssignmentError(f"no image for variable {name!r}")
            img = assignment[name]
            if target_vars is None:
                target_vars = img.variables
            elif img.variables != target_vars:
                raise VariableMismatchError("images use different variable lists")
            images.append(img)
        if target_vars is None:
            target_vars = ()
        # cache powers per variable: powers[k][e] = images[k] ** e
        powers = [[Form.one(target_vars), img] for img in images]
        result = Form.zero(target_vars)
        for exps, coeff in self.terms.items():
            term = Form.constant(target_vars, coeff)
            for k, e in enumerate(exps):
                if e == 0:
                    continue
                cache = powers[k]
                while len(cache) <= e:
                    cache.append(cache[-1] * cache[1])
                term = term * cache[e]
            result = result + term
        return result

    def evaluate(self, values):
        """Evaluate at a scalar point given as {variable: GaussianRational}."""
        total = GaussianRational(0)
        coords = []
        for name in self.variables:
            if name not in values:
                raise MissingAssignmentError(f"no value for variable {name!r}")
            coords.append(GaussianRational.coerce(values[name]))
        for exps, coeff in self.terms.items():
            v = coeff
            for k, e in enumerate(exps):
                if e:
                    v = v * coords[k] ** e
            total = total + v
        return total


# -- ring-level helpers ------------------------------------------------------


def divide_exact(p, d):
    """Return q with p = q*d, or None when d does not divide p exactly.

    Long division eliminating graded-lex leading terms; exactness follows
    because the order is multiplicative.
    """
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by zero form")
    quotient = {}
    rest = p
    d_exps = d.leading_exponents()
    d_coeff = d.terms[d_exps]
    while rest.terms:
        r_exps = rest.leading_exponents()
        q_exps = tuple(a - b for a, b in zip(r_exps, d_exps))
        if any(e < 0 for e in q_exps):
            return None
        q_coeff = rest.terms[r_exps] / d_coeff
        quotient[q_exps] = q_coeff
        rest = rest - Form.monomial(p.variables, q_exps, q_coeff) * d
    return Form(p.variables, quotient)


def divides(d, p):
    return divide_exact(p, d) is not None
