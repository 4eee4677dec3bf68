"""Exact minimal idempotents of twisted group algebras of cyclic 2-groups.

The algebra K_t<g> = K[g]/(g^(2^n) - a) over a field K of characteristic
!= 2 is commutative and semisimple; this package constructs its complete
family of minimal idempotents in closed form, classifies the base field,
and verifies the result against independent brute-force and structural
oracles.

Typical use::

    from cyclotwist import AlgebraSpec, build, parse_element, parse_field

    K = parse_field("Q")
    family = build(AlgebraSpec(K, 2, parse_element(K, "-4")))
    for item in family.items:
        print(item.label, item.dim, item.min_poly)
"""

from .algebra import AlgebraElement, AlgebraSpec, Poly
from .builder import IdempotentFamily, IdempotentItem, build
from .classify import (
    Classification,
    CosetDecomposition,
    classify,
    h_n,
    ks_decompose,
    ks_membership,
)
from .fields import (
    AmbientElement,
    AmbientError,
    FieldDescriptor,
    eps,
    is_in_k,
    kth_power_test_branching,
    norm,
    sigma,
    sqrt_ambient,
)
from .grammar import format_element, format_field, parse_element, parse_field
from .oracle import (
    VerificationError,
    VerificationReport,
    brute_enumerate_minimal,
    conjugate_pairing_check,
    cross_check,
    enumeration_backend,
    verify_family,
)

__version__ = "1.0.0"

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "AmbientElement",
    "AmbientError",
    "Classification",
    "CosetDecomposition",
    "FieldDescriptor",
    "IdempotentFamily",
    "IdempotentItem",
    "Poly",
    "VerificationError",
    "VerificationReport",
    "brute_enumerate_minimal",
    "build",
    "classify",
    "conjugate_pairing_check",
    "cross_check",
    "enumeration_backend",
    "eps",
    "format_element",
    "format_field",
    "h_n",
    "is_in_k",
    "ks_decompose",
    "ks_membership",
    "kth_power_test_branching",
    "norm",
    "parse_element",
    "parse_field",
    "sigma",
    "sqrt_ambient",
    "verify_family",
    "__version__",
]
