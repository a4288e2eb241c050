"""Bit-exact polynomial text format.

Grammar: terms joined by `+`/`-`; a term is `*`-separated factors, each a
rational `a` or `a/b`, the imaginary unit `i`, or a variable with optional
power `x^3`.  Whitespace is insignificant.  parse(print(p)) == p.

Terms whose coefficient has both real and imaginary part are printed as two
adjacent terms (`1/2*x + 3/4*i*x`); parsing re-merges them, so round-trips
are exact at the polynomial level.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .field import GaussianRational
from .forms import Form

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num")), m.start("num")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.k = 0
        self.variables = tuple(variables)
        self.index = {name: i for i, name in enumerate(self.variables)}

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def parse(self):
        total = Form.zero(self.variables)
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.take()
        while True:
            total = total + self.term(sign)
            kind, value, pos = self.peek()
            if kind is None:
                return total
            if kind != "op" or value not in "+-":
                raise ParseError(f"expected '+' or '-', got {value!r}", pos)
            sign = -1 if value == "-" else 1
            self.take()

    def term(self, sign):
        coeff = GaussianRational(sign)
        exps = [0] * len(self.variables)
        while True:
            coeff, exps = self.factor(coeff, exps)
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                continue
            return Form(self.variables, {tuple(exps): coeff})

    def factor(self, coeff, exps):
        kind, value, pos = self.take()
        if kind == "num":
            q = Fraction(value)
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                dk, dv, dpos = self.take()
                if dk != "num":
                    raise ParseError("expected denominator", dpos)
                if dv == 0:
                    raise ParseError("zero denominator", dpos)
                q = Fraction(value, dv)
            return coeff * GaussianRational(q), exps
        if kind == "name":
            power = 1
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "^":
                self.take()
                pk, pv, ppos = self.take()
                if pk != "num":
                    raise ParseError("expected integer power", ppos)
                power = pv
            if value == "i":
                return coeff * GaussianRational(0, 1) ** power, exps
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}", pos)
            exps = list(exps)
            exps[self.index[value]] += power
            return coeff, exps
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_form(text, variables):
    """Parse polynomial text over a declared variable list."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text", 0)
    return _Parser(tokens, variables).parse()


def parse_scalar(text):
    """Parse a constant expression into a GaussianRational."""
    form = parse_form(text, ())
    return form.constant_value()


def _frac_text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _monomial_text(variables, exps):
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return parts


def _printed_terms(form):
    """(sign, text) pieces in descending graded-lex order, complex split."""
    pieces = []
    for exps, coeff in form.sorted_terms():
        mono = _monomial_text(form.variables, exps)
        for q, imag in ((coeff.re, False), (coeff.im, True)):
            if q == 0:
                continue
            sign = "-" if q < 0 else "+"
            q = abs(q)
            parts = []
            if q != 1 or (not mono and not imag):
                parts.append(_frac_text(q))
            if imag:
                parts.append("i")
            parts.extend(mono)
            pieces.append((sign, "*".join(parts)))
    return pieces


def form_to_text(form):
    """Canonical text; parse_form(form_to_text(p), p.variables) == p."""
    pieces = _printed_terms(form)
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = [first if first_sign == "+" else "-" + first]
    for sign, text in pieces[1:]:
        out.append(f" {sign} {text}")
    return "".join(out)


def scalar_to_text(value):
    return form_to_text(Form.constant((), value))
