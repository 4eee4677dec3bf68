"""Field classification and 2-power coset analysis of the scalar a.

Everything downstream hinges on two integers and one coset form:

* the field constant m: the ambient field contains primitive 2^t-th
  roots of unity exactly for t <= m;
* the depth s = h_n(a): the largest s <= n such that a has a 2^s-th
  root somewhere in the ambient field;
* the shape of a inside K_s = K* intersect (A*)^(2^s), which is always
  b^(2^s), -b^(2^s) or (1+eps_m)^(2^s) b^(2^s) for some b in K*.

The decomposition is fully constructive: from an ambient witness
alpha^(2^s) = a it manufactures the K-rational coset representative b
by dividing out an explicit root of unity.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

from .fields import (
    IDENTITY,
    POWER_TEST_CAP,
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

PLAIN = "plain"
NEGATED = "negated"
EPS_COSET = "eps_coset"

TYPE_B = "B"
TYPE_D = "D"
TYPE_E = "E"


@dataclass(frozen=True)
class Classification:
    """Symmetry type of K inside A, plus the root-of-unity bound m.

    ``emulates`` is an annotation only: when m >= n+1 the finite supply
    of 2-power roots can never run out within the group, so the field
    behaves exactly like one with unbounded supply ("A" for identity
    symmetry, "C" for inverse-conjugation symmetry).  It is None when no
    group size n was provided and "none" when the bound does not apply.
    No construction dispatches on it.
    """

    field_type: str
    m: int
    emulates: Optional[str] = None


@dataclass(frozen=True)
class CosetDecomposition:
    """a = b^(2^s) (plain), -b^(2^s) (negated) or (1+eps_m)^(2^s) b^(2^s)
    (eps_coset), with b in K*."""

    s: int
    form: str
    b: AmbientElement


@functools.lru_cache(maxsize=None)
def _classify_core(K: FieldDescriptor) -> tuple:
    m = K.root_level
    if K.involution == IDENTITY:
        return TYPE_B, m
    em = eps(K, m)
    img = sigma(K, em)
    if img == em**-1:
        assert m >= 2
        return TYPE_D, m
    assert img == -(em**-1) and m >= 3
    return TYPE_E, m


def classify(K: FieldDescriptor, n: Optional[int] = None) -> Classification:
    """Determine the symmetry type of K and the constant m.

    Type B: the involution is trivial (K = A).  Otherwise the type is
    read off the involution's action on the top root of unity eps_m:
    eps_m -> eps_m^-1 is type D, eps_m -> -eps_m^-1 is type E.
    """
    field_type, m = _classify_core(K)
    emulates: Optional[str] = None
    if n is not None:
        if n < 0:
            raise ValueError("n must be >= 0")
        if m >= n + 1 and field_type == TYPE_B:
            emulates = "A"
        elif m >= n + 1 and field_type == TYPE_D:
            emulates = "C"
        else:
            emulates = "none"
    return Classification(field_type, m, emulates)


def _require_unit_in_k(K: FieldDescriptor, a: AmbientElement) -> None:
    if a.owner != K:
        raise AmbientError("element does not belong to this field")
    if a.is_zero():
        raise ValueError("a must be nonzero")
    if not is_in_k(K, a):
        raise ValueError("a must lie in the fixed field K")


def h_n(K: FieldDescriptor, a: AmbientElement, n: int) -> int:
    """The largest s in [0, n] with a in (A*)^(2^s).

    Monotone in s, so we climb until the branching power test first
    fails.  A single chain of square roots would *not* be sound here:
    each depth is decided by its own full sign search.
    """
    _require_unit_in_k(K, a)
    if not 0 <= n <= POWER_TEST_CAP:
        raise ValueError(f"n must be in [0, {POWER_TEST_CAP}]")
    for s in range(1, n + 1):
        if kth_power_test_branching(K, a, 1 << s, "ambient") is None:
            return s - 1
    return n


def ks_membership(K: FieldDescriptor, a: AmbientElement, s: int) -> bool:
    """Is a in K_s = K* intersect (A*)^(2^s)?  The witness may be ambient."""
    _require_unit_in_k(K, a)
    if not 0 <= s <= POWER_TEST_CAP:
        raise ValueError(f"s must be in [0, {POWER_TEST_CAP}]")
    if s == 0:
        return True
    return kth_power_test_branching(K, a, 1 << s, "ambient") is not None


def _root_order_log2(K: FieldDescriptor, x: AmbientElement) -> int:
    """t such that x has multiplicative order 2^t; x must be such a root."""
    t, y = 0, x
    one = K.one()
    while y != one:
        y = y * y
        t += 1
        assert t <= K.root_level, "not a 2-power root of unity"
    return t


def _strip_root(K: FieldDescriptor, alpha: AmbientElement, t: int) -> AmbientElement:
    """Divide alpha by a square root of its unit part alpha^2/N(alpha).

    The quotient is fixed by the involution whenever the root eta has
    norm +1; when the norm is -1 (which forces t = m-1 and type E) an
    extra factor eps_2 repairs it.
    """
    if t == 0:
        return alpha
    omega = alpha * alpha / norm(K, alpha)
    eta = sqrt_ambient(K, omega)
    assert eta is not None, "2-power roots of unity are squares up to the top"
    if norm(K, eta) == K.one():
        return alpha / eta
    assert norm(K, eta) == -K.one()
    return alpha * eps(K, 2) / eta


def ks_decompose(K: FieldDescriptor, a: AmbientElement, s: int) -> CosetDecomposition:
    """Write a in one of the three coset forms of K_s, constructively.

    Raises ValueError when a is not in K_s.  The returned representative
    b is always in K*; which form comes out is forced by the field type
    and by s relative to m, and internal assertions check that the
    arithmetic agrees with that bookkeeping.
    """
    _require_unit_in_k(K, a)
    if not 0 <= s <= POWER_TEST_CAP:
        raise ValueError(f"s must be in [0, {POWER_TEST_CAP}]")
    if s == 0:
        return CosetDecomposition(0, PLAIN, a)
    alpha = kth_power_test_branching(K, a, 1 << s, "ambient")
    if alpha is None:
        raise ValueError(f"a is not a 2^{s}-th power in the ambient field")
    if K.involution == IDENTITY:
        return CosetDecomposition(s, PLAIN, alpha)

    field_type, m = _classify_core(K)
    one = K.one()
    omega = alpha * alpha / norm(K, alpha)
    t = _root_order_log2(K, omega)
    assert t <= min(s, m)

    if field_type == TYPE_D and t == m:
        # the unit part has full order; only the coset of (1+eps_m) absorbs it
        em = eps(K, m)
        alpha2 = alpha / (one + em)
        omega2 = alpha2 * alpha2 / norm(K, alpha2)
        t2 = _root_order_log2(K, omega2)
        assert t2 < m
        b = _strip_root(K, alpha2, t2)
        assert is_in_k(K, b)
        assert a == ((one + em) * b) ** (1 << s)
        return CosetDecomposition(s, EPS_COSET, b)

    b = _strip_root(K, alpha, t)
    assert is_in_k(K, b)
    resid = a / b ** (1 << s)
    if resid == one:
        return CosetDecomposition(s, PLAIN, b)
    assert resid == -one and 1 <= s <= m - 1
    return CosetDecomposition(s, NEGATED, b)


def recompose(K: FieldDescriptor, dec: CosetDecomposition) -> AmbientElement:
    """Inverse of ks_decompose: rebuild a from (s, form, b)."""
    base = dec.b ** (1 << dec.s)
    if dec.form == PLAIN:
        return base
    if dec.form == NEGATED:
        return -base
    if dec.form == EPS_COSET:
        em = eps(K, _classify_core(K)[1])
        return (K.one() + em) ** (1 << dec.s) * base
    raise ValueError(f"unknown coset form {dec.form!r}")
