"""Batch front end.

Exit codes: 0 success, 1 input/usage error, 2 mathematical negative
(NotClosedAtDegree at every attempted degree, failed verification, reported
violation).  All randomness flows from the single --seed flag, so identical
invocations produce byte-identical artifacts.
"""

import argparse
import json
import sys

from . import jsonio
from .domains import (
    boundary_smooth_at,
    evaluate_real,
    levi_form,
    segre_injectivity_evidence,
    segre_symmetry_check,
    segre_variety,
)
from .errors import (
    BirlinError,
    CertificateError,
    DimCapExceeded,
    NotClosedAtDegree,
    NotInSpan,
    NotOnBoundary,
    NotSmooth,
    ParseError,
)
from .field import GaussianRational
from .linearize import (
    base_point_evidence,
    build_certificate,
    certificate_identity_failures,
    family_decompose,
    monomial_space,
    verify_equivariance,
)
from .maps import ProjectivePoint, compose, segre_graph_degree_bound
from .sampling import DEFAULT_SEED, RationalSampler
from .textform import form_to_text, parse_form, scalar_to_text

TASKS = (
    "linearize",
    "verify",
    "compose",
    "segre-variety",
    "levi",
    "decompose",
    "degree-bound",
    "domain-report",
)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="birlin",
        description="Exact toolkit for projective linearization of birational "
        "group actions and algebraic-domain boundary geometry.",
    )
    parser.add_argument("--task", required=True, choices=TASKS)
    parser.add_argument(
        "--input",
        action="append",
        default=[],
        help="input file path (repeatable where the task takes several)",
    )
    parser.add_argument("--degree", type=int, help="degree m (of the seed forms)")
    parser.add_argument("--degree-max", type=int, help="upper end of the degree loop")
    parser.add_argument("--dim-cap", type=int, default=200)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--out", help="artifact path; stdout when omitted")
    return parser


def emit(doc, out_path):
    doc = dict(doc)
    doc.setdefault("format_version", jsonio.FORMAT_VERSION)
    text = jsonio.dumps(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    sys.stdout.write(text)


def _load_inputs(paths, count, task):
    if len(paths) != count:
        raise UsageError(f"task {task} needs exactly {count} --input file(s)")
    return [jsonio.load(p) for p in paths]


class UsageError(Exception):
    pass


def run_linearize(args):
    (job,) = _load_inputs(args.input, 1, "linearize")
    generators = [jsonio.map_from_json(doc) for doc in job["generators"]]
    variables = generators[0].variables
    if args.degree is None:
        raise UsageError("linearize needs --degree")
    degree_max = args.degree_max if args.degree_max is not None else args.degree
    attempts = []
    certificate = None
    seed_texts = job.get("seeds")
    supplied = (
        [parse_form(t, variables) for t in seed_texts] if seed_texts else None
    )
    for m in range(args.degree, degree_max + 1):
        # supplied seeds apply at their own degree; other degrees in the
        # range fall back to the full monomial basis
        if supplied and all(s.is_homogeneous_of_degree(m) for s in supplied):
            seeds = supplied
        else:
            seeds = monomial_space(variables, m)
        try:
            certificate = build_certificate(seeds, generators, m, args.dim_cap)
        except (NotClosedAtDegree, DimCapExceeded, NotInSpan) as exc:
            attempts.append(
                {"degree": m, "outcome": type(exc).__name__, "detail": str(exc)}
            )
            continue
        attempts.append({"degree": m, "outcome": "certificate"})
        break
    if certificate is None:
        emit({"task": "linearize", "attempts": attempts, "certificate": None}, args.out)
        return 2
    sampler = RationalSampler(args.seed)
    points = [
        ProjectivePoint(sampler.point(len(variables))) for _ in range(args.samples)
    ]
    equivariance = verify_equivariance(certificate, points)
    violations = [e for e in equivariance if e["status"] == "violation"]
    evidence = base_point_evidence(certificate.space, points)
    doc = {
        "task": "linearize",
        "attempts": attempts,
        "certificate": jsonio.certificate_to_json(certificate),
        "equivariance": {
            "checked": len(equivariance),
            "ok": sum(1 for e in equivariance if e["status"] == "ok"),
            "skipped": sum(1 for e in equivariance if e["status"] == "skipped"),
            "violations": violations,
        },
        "base_point_evidence": evidence,
    }
    emit(doc, args.out)
    return 2 if violations else 0


def run_verify(args):
    (doc,) = _load_inputs(args.input, 1, "verify")
    if "certificate" in doc and doc["certificate"] is not None:
        doc = doc["certificate"]
    certificate = jsonio.certificate_from_json(doc)
    degree_issues = []
    for g_index, entry in enumerate(certificate.entries):
        cof_deg = entry.cofactor.total_degree()
        expected = certificate.space.degree * entry.map.degree
        if cof_deg < 0 or cof_deg + certificate.space.degree != expected:
            degree_issues.append(
                {
                    "generator": g_index,
                    "reason": "cofactor degree mismatch",
                    "cofactor_degree": cof_deg,
                    "expected": expected - certificate.space.degree,
                }
            )
    failures = [] if degree_issues else certificate_identity_failures(certificate)
    report = {
        "task": "verify",
        "dimension": certificate.dimension,
        "generators": len(certificate.entries),
        "degree_issues": degree_issues,
        "identity_failures": [
            {
                "generator": g,
                "basis_index": j,
                "first_failing_monomial": list(m) if isinstance(m, tuple) else m,
            }
            for g, j, m in failures
        ],
        "ok": not degree_issues and not failures,
    }
    emit(report, args.out)
    return 0 if report["ok"] else 2


def run_compose(args):
    docs = _load_inputs(args.input, 2, "compose")
    f = jsonio.map_from_json(docs[0])
    g = jsonio.map_from_json(docs[1], variables=f.variables)
    h = compose(f, g)
    emit({"task": "compose", **jsonio.map_to_json(h)}, args.out)
    return 0


def run_segre_variety(args):
    (job,) = _load_inputs(args.input, 1, "segre-variety")
    r = jsonio.domain_from_json(job["domain"])
    w = jsonio.point_from_json(job["w"])
    q = segre_variety(r, w)
    emit(
        {
            "task": "segre-variety",
            "w": jsonio.point_to_json(q.w),
            "poly": form_to_text(q.poly),
            "degenerate": q.degenerate,
        },
        args.out,
    )
    return 0


def run_levi(args):
    (job,) = _load_inputs(args.input, 1, "levi")
    r = jsonio.domain_from_json(job["domain"])
    p = jsonio.point_from_json(job["p"])
    try:
        report = levi_form(r, p)
    except (NotOnBoundary, NotSmooth) as exc:
        emit({"task": "levi", "ok": False, "reason": str(exc)}, args.out)
        return 2
    emit(
        {
            "task": "levi",
            "point": jsonio.point_to_json(report.point),
            "gradient": [scalar_to_text(v) for v in report.gradient],
            "hessian": [[scalar_to_text(v) for v in row] for row in report.hessian],
            "tangent_basis": [
                [scalar_to_text(v) for v in vec] for vec in report.tangent_basis
            ],
            "restricted_rank": report.restricted_rank,
            "nondegenerate": report.nondegenerate,
            "ok": True,
        },
        args.out,
    )
    return 0


def run_decompose(args):
    (job,) = _load_inputs(args.input, 1, "decompose")
    family = jsonio.family_from_json(job["family"])
    h = parse_form(job["h"], family.y_variables)
    pairs, space = family_decompose(family, h)
    emit(
        {
            "task": "decompose",
            "pairs": [
                {"phi": form_to_text(phi), "psi": form_to_text(psi)}
                for phi, psi in pairs
            ],
            "space": {
                "degree": space.degree,
                "basis": [form_to_text(p) for p in space.basis],
            },
        },
        args.out,
    )
    return 0


def run_degree_bound(args):
    (job,) = _load_inputs(args.input, 1, "degree-bound")
    bound = segre_graph_degree_bound(job["n"], job["d"])
    emit({"task": "degree-bound", "n": job["n"], "d": job["d"], "bound": bound}, args.out)
    return 0


def run_domain_report(args):
    (job,) = _load_inputs(args.input, 1, "domain-report")
    r = jsonio.domain_from_json(job["domain"])
    sampler = RationalSampler(args.seed)
    samples = [sampler.affine_point(r.n) for _ in range(args.samples)]
    symmetry_ok = True
    for k in range(0, len(samples) - 1, 2):
        a, b = segre_symmetry_check(r, samples[k], samples[k + 1])
        if a != b:
            symmetry_ok = False
    injectivity = segre_injectivity_evidence(r, samples)
    boundary = []
    for raw in job.get("boundary_points", []):
        p = jsonio.point_from_json(raw)
        entry = {"point": jsonio.point_to_json(p)}
        value = evaluate_real(r, p)
        entry["r_value"] = scalar_to_text(GaussianRational(value))
        if value != 0:
            entry["status"] = "not on boundary"
        else:
            entry["smooth"] = boundary_smooth_at(r, p)
            if entry["smooth"]:
                report = levi_form(r, p)
                entry["restricted_rank"] = report.restricted_rank
                entry["nondegenerate"] = report.nondegenerate
            entry["status"] = "checked"
        boundary.append(entry)
    doc = {
        "task": "domain-report",
        "segre_symmetry_ok": symmetry_ok,
        "segre_injectivity": {
            "collisions": injectivity["collisions"],
            "degenerate_samples": injectivity["degenerate"],
            "exact_linear_check": injectivity["exact_linear_check"],
            "ok": injectivity["ok"],
        },
        "boundary_points": boundary,
        "ok": symmetry_ok and injectivity["ok"],
    }
    emit(doc, args.out)
    return 0 if doc["ok"] else 2


RUNNERS = {
    "linearize": run_linearize,
    "verify": run_verify,
    "compose": run_compose,
    "segre-variety": run_segre_variety,
    "levi": run_levi,
    "decompose": run_decompose,
    "degree-bound": run_degree_bound,
    "domain-report": run_domain_report,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return RUNNERS[args.task](args)
    except (UsageError, ParseError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except BirlinError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
