"""Exact-arithmetic toolkit for projective linearization of birational group
actions on projective space, with boundary-geometry checks for algebraic
domains (Segre varieties, Levi forms, injectivity evidence).
"""

from .bihom import BihomogeneousForm, bihomogeneous_decompose
from .domains import (
    LeviFormReport,
    RealDefiningPolynomial,
    SegreVarietyPoly,
    boundary_smooth_at,
    complexify,
    evaluate_real,
    levi_form,
    new_defining_poly,
    segre_injectivity_evidence,
    segre_symmetry_check,
    segre_variety,
    unit_ball,
)
from .errors import (
    ArityError,
    BirlinError,
    CertificateError,
    DegenerateCompositionError,
    DegenerateParameterError,
    DegreeError,
    DimCapExceeded,
    IndeterminatePointError,
    NotClosedAtDegree,
    NotInSpan,
    NotOnBoundary,
    NotRealValued,
    NotSmooth,
    ParseError,
    ZeroInputError,
)
from .field import GaussianRational
from .forms import Form, ZERO_DEGREE, divide_exact
from .gcd import gcd, gcd_many
from .linearize import (
    FormSpace,
    LinearizationCertificate,
    RationalFamily,
    base_point_evidence,
    build_certificate,
    certificate_identity_failures,
    check_group_law,
    family_decompose,
    invariant_closure,
    monomial_space,
    reduced_pullback_system,
    solve_representation,
    specialize_family,
    verify_equivariance,
)
from .maps import (
    BirationalMap,
    ProjectivePoint,
    SegrePoint,
    apply_map,
    compose,
    graph_point,
    identity_map,
    is_identity_up_to_scalar,
    map_from_matrix,
    new_map,
    segre_embed,
    segre_graph_degree_bound,
    verify_inverse,
)
from .sampling import DEFAULT_SEED, RationalSampler
from .textform import form_to_text, parse_form, parse_scalar, scalar_to_text

__version__ = "0.1.0"
