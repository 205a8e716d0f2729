"""ntcert: exact-arithmetic number-theory certificates.

Construction and certification, entirely over exact rationals, of:
cyclic cubic fields cut out by square-discriminant cubics; an elliptic
family whose fibers carry points over those fields, with torsion bounds
by reduction and non-torsion certificates; superelliptic coverings of the
line branched at three points and their triangle-curve symmetries;
Newton-polygon degree plans for monomial substitutions; and the exact
eta-quotient parametrization of the family's j-invariant.
"""

from .cubicfield import (
    CubicField,
    DisjointnessWitness,
    GaloisClass,
    SplitType,
    Verdict,
    distinctness_witness,
    galois_class,
    splitting_type_mod_p,
)
from .coverings import (
    RamificationData,
    SuperellipticModel,
    TriangleCurve,
    fermat_search,
    model_from_n,
    psi_identities,
    quotient_genus,
    rh_genus,
    solve_eq5,
    superelliptic_genus,
    triangle_checks,
)
from .family import (
    ExtensionCertificate,
    FamilyParams,
    FieldPoint,
    WeierstrassCurve,
    curve_invariants_j,
    derive_family,
    fiber_at_s,
    group_law,
    negate,
    nontorsion_certificate,
    point_from_fiber,
    rational_3_torsion,
    scalar_mul,
    scan_family,
    torsion_bound,
)
from .newton import (
    DegreePlan,
    NewtonPolygon,
    corner_check,
    min_universal_degree,
    newton_polygon,
    plan_degrees,
    specialize_b,
    substitute_st,
)
from .qseries import (
    LaurentSeries,
    euler_pow,
    hauptmodul_t,
    j_series,
    verify_eta_identity,
)

__version__ = "0.1.0"
