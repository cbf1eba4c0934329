"""Exact-arithmetic laboratory for divisibility and proportion.

Three commutative cancellative monoids (the naturals, congruence
classes with an adjoined unit, and nonnegative quadratic integers),
the subtractive gcd algorithm with checkable loop invariants, an
exhaustive decision procedure for proportionality of pairs, complete
factorization enumeration, and bounded counterexample surveys for the
classical divisibility properties that hold in the first monoid and
fail in the other two.
"""

from .errors import (
    BoundExceededError,
    EuclidLabError,
    InvalidInputError,
    MonoidMismatchError,
    MonoidSpecSyntaxError,
    UnsupportedStructureError,
)
from .euclid import (
    BezoutCertificate,
    EuclidTrace,
    LoopInvariantReport,
    TraceStep,
    bezout,
    check_loop_invariants,
    euclid_lemma_bezout_proof,
    euclid_subtractive,
    gcd,
    porism_check,
)
from .factorization import (
    Factorization,
    GcdReport,
    PropertyFlag,
    SurveyReport,
    algebraic_gcd,
    euclid_lemma_survey,
    factorizations,
    is_irreducible,
    three_property_survey,
)
from .monoids import (
    DEFAULT_ENUMERATION_CEILING,
    Congruence,
    DivisibilityTable,
    Element,
    Monoid,
    Naturals,
    Quadratic,
    common_divisors,
    contains,
    divisors,
    enumerate_up_to,
    mul,
    try_divide,
)
from .proportion import (
    CanonicalPartsMode,
    ProportionQuad,
    ProportionWitness,
    TransitivityWitness,
    add_elements,
    alternando_check,
    fraction_equal,
    least_pair,
    pythagorean,
    repair_check,
    transitivity_survey,
    vii6_check,
    vii19_check,
    vii20_check,
)
from .specparse import parse_element, parse_monoid_spec

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "BoundExceededError",
    "CanonicalPartsMode",
    "Congruence",
    "DEFAULT_ENUMERATION_CEILING",
    "DivisibilityTable",
    "Element",
    "EuclidLabError",
    "EuclidTrace",
    "Factorization",
    "GcdReport",
    "InvalidInputError",
    "LoopInvariantReport",
    "Monoid",
    "MonoidMismatchError",
    "MonoidSpecSyntaxError",
    "Naturals",
    "PropertyFlag",
    "ProportionQuad",
    "ProportionWitness",
    "Quadratic",
    "SurveyReport",
    "TraceStep",
    "TransitivityWitness",
    "UnsupportedStructureError",
    "add_elements",
    "algebraic_gcd",
    "alternando_check",
    "bezout",
    "check_loop_invariants",
    "common_divisors",
    "contains",
    "divisors",
    "enumerate_up_to",
    "euclid_lemma_bezout_proof",
    "euclid_lemma_survey",
    "euclid_subtractive",
    "factorizations",
    "fraction_equal",
    "gcd",
    "is_irreducible",
    "least_pair",
    "mul",
    "parse_element",
    "parse_monoid_spec",
    "porism_check",
    "pythagorean",
    "repair_check",
    "three_property_survey",
    "transitivity_survey",
    "try_divide",
    "vii6_check",
    "vii19_check",
    "vii20_check",
]
