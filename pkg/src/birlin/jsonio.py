"""JSON wire formats for maps, certificates, domains, and families.

Emitted documents always carry `format_version` and an explicit `variables`
list.  On input, `variables` may be omitted for maps, in which case the
identifiers appearing in the component texts are collected and ordered by a
natural sort (name prefix, then numeric suffix).
"""

import json
import re

from .bihom import BihomogeneousForm
from .domains import RealDefiningPolynomial, domain_variables
from .errors import ArityError, CertificateError, ParseError
from .field import GaussianRational
from .linearize import (
    CertificateEntry,
    FormSpace,
    LinearizationCertificate,
    RationalFamily,
)
from .maps import BirationalMap, new_map, verify_inverse
from .textform import form_to_text, parse_form, parse_scalar, scalar_to_text

FORMAT_VERSION = 1

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_NATURAL = re.compile(r"^([A-Za-z_]+)(\d*)$")


def natural_sort_key(name):
    m = _NATURAL.match(name)
    if m is None:
        return (name, -1)
    prefix, digits = m.groups()
    return (prefix, int(digits) if digits else -1)


def infer_variables(texts, expected_count):
    names = set()
    for text in texts:
        for token in _IDENTIFIER.findall(text):
            if token != "i":
                names.add(token)
    ordered = sorted(names, key=natural_sort_key)
    if len(ordered) != expected_count:
        raise ParseError(
            f"cannot infer variables: found {ordered}, expected {expected_count}"
        )
    return tuple(ordered)


# -- maps ---------------------------------------------------------------------


def map_to_json(f, include_inverse=True):
    doc = {
        "format_version": FORMAT_VERSION,
        "dim": f.dimension,
        "variables": list(f.variables),
        "components": [form_to_text(c) for c in f.components],
    }
    if include_inverse and f.inverse is not None:
        doc["inverse"] = map_to_json(f.inverse, include_inverse=False)
    return doc


def map_from_json(doc, variables=None):
    dim = doc["dim"]
    texts = doc["components"]
    if len(texts) != dim + 1:
        raise ArityError(f"{len(texts)} components for dimension {dim}")
    if variables is None:
        if "variables" in doc:
            variables = tuple(doc["variables"])
        else:
            variables = infer_variables(texts, dim + 1)
    components = [parse_form(t, variables) for t in texts]
    f = new_map(components)
    if "inverse" in doc:
        g = map_from_json(doc["inverse"], variables=variables)
        verify_inverse(f, g)
    return f


# -- certificates -------------------------------------------------------------


def certificate_to_json(cert):
    space = cert.space
    return {
        "format_version": FORMAT_VERSION,
        "dim": len(space.variables) - 1,
        "degree": space.degree,
        "variables": list(space.variables),
        "basis": [form_to_text(p) for p in space.basis],
        "generators": [
            {
                "map": map_to_json(entry.map),
                "matrix": [[scalar_to_text(v) for v in row] for row in entry.matrix],
                "cofactor": form_to_text(entry.cofactor),
            }
            for entry in cert.entries
        ],
    }


def certificate_from_json(doc):
    try:
        variables = tuple(doc["variables"]) if "variables" in doc else None
        degree = doc["degree"]
        basis_texts = doc["basis"]
        generator_docs = doc["generators"]
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"certificate schema violation: {exc}") from exc
    if variables is None:
        texts = list(basis_texts)
        for g in generator_docs:
            texts.extend(g["map"]["components"])
        variables = infer_variables(texts, doc["dim"] + 1)
    basis = [parse_form(t, variables) for t in basis_texts]
    space = FormSpace(variables, degree, basis, already_reduced=True)
    entries = []
    for g_doc in generator_docs:
        try:
            f = map_from_json(g_doc["map"], variables=variables)
            matrix = [[parse_scalar(v) for v in row] for row in g_doc["matrix"]]
            cofactor = parse_form(g_doc["cofactor"], variables)
        except (KeyError, TypeError) as exc:
            raise CertificateError(f"certificate schema violation: {exc}") from exc
        if len(matrix) != len(basis) or any(len(row) != len(basis) for row in matrix):
            raise CertificateError("matrix size does not match the basis")
        entries.append(CertificateEntry(f, matrix, cofactor))
    return LinearizationCertificate(space, entries)


# -- domains ------------------------------------------------------------------


def domain_to_json(r):
    return {
        "format_version": FORMAT_VERSION,
        "n": r.n,
        "r": form_to_text(r.poly),
    }


def domain_from_json(doc):
    n = doc["n"]
    poly = parse_form(doc["r"], domain_variables(n))
    return RealDefiningPolynomial(n, poly)


# -- families -----------------------------------------------------------------


def family_to_json(family):
    return {
        "format_version": FORMAT_VERSION,
        "x_variables": list(family.x_variables),
        "y_variables": list(family.y_variables),
        "bidegree": list(family.bidegree),
        "components": [form_to_text(c.form) for c in family.components],
    }


def family_from_json(doc):
    x_vars = tuple(doc["x_variables"])
    y_vars = tuple(doc["y_variables"])
    joint = x_vars + y_vars
    bidegree = tuple(doc["bidegree"])
    components = [
        BihomogeneousForm(parse_form(t, joint), x_vars, y_vars, bidegree)
        for t in doc["components"]
    ]
    return RationalFamily(components)


# -- points -------------------------------------------------------------------


def point_from_json(values):
    return [parse_scalar(str(v)) for v in values]


def point_to_json(coordinates):
    return [scalar_to_text(GaussianRational.coerce(c)) for c in coordinates]


# -- files --------------------------------------------------------------------


def dump(doc, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, indent=2, sort_keys=True)
        handle.write("\n")


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)
