"""monograde: exact lattice geometry for normal affine monoid rings and
multigraded polynomial ideals.

The package computes, over arbitrary-precision integers and rationals:

* Hermite and Smith normal forms, integer kernels and solves, abelian
  quotients (``exact_linalg``);
* polyhedral cone duality by the double description method (``cone``);
* affine monoid normalization, Hilbert bases, normality witnesses and
  unit groups (``monoid``);
* divisorial ideals, their minimal generators, the interior-point
  canonical module, divisor class groups and the Gorenstein decision
  (``divisorial``);
* reduced Groebner bases, elimination, saturation and quotient
  dimension over Q (``groebner``);
* multigraded hulls of ideals and graded-core diagnostics of primes
  (``multigraded``);
* a deterministic JSON command line front end (``cli``).
"""

__version__ = "0.1.0"

from .cone import Cone, facets_of_rays, membership, rays_of_facets
from .divisorial import (
    CanonicalModule,
    DivisorClassGroup,
    DivisorialIdeal,
    canonical_module,
    class_group,
    divisorial_ideal,
    is_gorenstein,
    members,
    minimal_generators,
    same_class,
)
from .exact_linalg import (
    AbelianQuotient,
    cokernel,
    determinant,
    elementary_divisors,
    hnf,
    kernel_basis,
    primitive,
    rank,
    snf,
    solve_integer,
    unimodular_inverse,
)
from .groebner import (
    BudgetExceededError,
    IdealPresentation,
    Polynomial,
    TermOrder,
    buchberger,
    default_variables,
    elimination_order,
    eliminate,
    format_polynomial,
    grevlex,
    groebner_basis,
    ideal_dimension,
    lex,
    normal_form,
    parse_polynomial,
    s_polynomial,
    saturate,
)
from .monoid import (
    AffineMonoid,
    EnumerationLimitError,
    GradingAnalysis,
    NonNormalError,
    degree_group_analysis,
    hilbert_basis,
    is_normal,
    monoid_from_cone_rays,
    normalize_presentation,
    unit_group,
)
from .multigraded import (
    GradedRingSpec,
    NotPrimeError,
    PrimeAnalysis,
    analyze_prime,
    delta_component,
    graded_hull,
    graded_hull_z,
    homogeneous_components,
    is_graded,
)

__all__ = [name for name in dir() if not name.startswith("_")]
