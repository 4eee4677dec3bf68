"""Independent verification of constructed idempotent families.

Three unrelated lines of evidence are kept deliberately separate:

* ``verify_family``: structural checks inside the algebra itself
  (idempotency, K-rationality, orthogonality, completeness, component
  dimensions, certified irreducibility of the minimal polynomials);
* ``brute_enumerate_minimal`` / ``cross_check``: over finite fields,
  exhaustive enumeration of every idempotent, with no shared code or
  ideas with the closed-form construction;
* ``conjugate_pairing_check``: rebuild the family over the full ambient
  field (trivial involution), let the involution act on it, and compare
  the orbit sums against the K-side family.

None of these may be collapsed into another; a formula error that slips
past one tends to be caught by the next.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import _kernel
from .algebra import AlgebraElement, AlgebraSpec, certify_irreducible
from .fields import (
    FINITE,
    FROBENIUS,
    IDENTITY,
    AmbientElement,
    FieldDescriptor,
    sigma,
)

DEFAULT_ENUM_BUDGET = 10**6


class VerificationError(RuntimeError):
    """Raised by checked builds; carries the full report."""

    def __init__(self, report: "VerificationReport"):
        self.report = report
        super().__init__(report.headline())


class EnumerationBudgetError(ValueError):
    """The requested brute-force enumeration would be too large."""


@dataclass(frozen=True)
class ItemCheck:
    label: tuple
    nonzero: bool
    idempotent: bool
    k_rational: bool
    min_poly_annihilates: bool
    min_poly_k_rational: bool
    dim_consistent: bool
    primitive: Optional[bool]  # None = no certificate applies

    def violations(self) -> List[str]:
        out = []
        name = f"e{self.label}"
        for flag, what in (
            (self.nonzero, "is zero"),
            (self.idempotent, "is not idempotent"),
            (self.k_rational, "has coefficients outside K"),
            (self.min_poly_annihilates, "is not annihilated by its min poly"),
            (self.min_poly_k_rational, "has a min poly outside K[x]"),
            (self.dim_consistent, "has dim != deg(min poly)"),
        ):
            if not flag:
                out.append(f"{name} {what}")
        if self.primitive is False:
            out.append(f"{name} has a reducible min poly (component is not minimal)")
        return out


@dataclass(frozen=True)
class VerificationReport:
    item_checks: Tuple[ItemCheck, ...]
    orthogonal: bool
    sum_is_one: bool
    dim_total: int
    expected_dim: int
    failures: Tuple[str, ...]
    uncertified: Tuple[tuple, ...]

    @property
    def sound(self) -> bool:
        """No definite violation (uncertified components allowed)."""
        return not self.failures

    @property
    def ok(self) -> bool:
        """Sound and every component certified minimal."""
        return self.sound and not self.uncertified

    def headline(self) -> str:
        if self.ok:
            return "PASS"
        if self.failures:
            return "FAIL: " + "; ".join(self.failures)
        labels = ", ".join(str(l) for l in self.uncertified)
        return f"NOT CERTIFIED: irreducibility open for {labels}"

    def as_dict(self) -> dict:
        return {
            "pass": self.ok,
            "sound": self.sound,
            "orthogonal": self.orthogonal,
            "sum_is_one": self.sum_is_one,
            "dim_total": self.dim_total,
            "expected_dim": self.expected_dim,
            "failures": list(self.failures),
            "uncertified": [list(l) for l in self.uncertified],
            "items": [
                {
                    "label": list(c.label),
                    "nonzero": c.nonzero,
                    "idempotent": c.idempotent,
                    "k_rational": c.k_rational,
                    "min_poly_annihilates": c.min_poly_annihilates,
                    "min_poly_k_rational": c.min_poly_k_rational,
                    "dim_consistent": c.dim_consistent,
                    "primitive": c.primitive,
                }
                for c in self.item_checks
            ],
        }


def verify_family(spec: AlgebraSpec, family) -> VerificationReport:
    """Run every structural check on a constructed family."""
    K = spec.field
    failures: List[str] = []
    checks: List[ItemCheck] = []
    uncertified: List[tuple] = []

    labels = [it.label for it in family.items]
    if len(set(labels)) != len(labels):
        failures.append("duplicate labels in family")

    gbar = spec.gbar()
    for it in family.items:
        e = it.element
        z = gbar * e
        acc = spec.zero()
        for c in reversed(it.min_poly.coeffs):
            acc = acc * z + e.scale(c)
        primitive = certify_irreducible(K, it.min_poly)
        check = ItemCheck(
            label=it.label,
            nonzero=not e.is_zero(),
            idempotent=e * e == e,
            k_rational=e.is_k_rational(),
            min_poly_annihilates=acc.is_zero(),
            min_poly_k_rational=it.min_poly.is_k_rational(K),
            dim_consistent=it.min_poly.degree == it.dim,
            primitive=primitive,
        )
        checks.append(check)
        failures.extend(check.violations())
        if primitive is None:
            uncertified.append(it.label)

    orthogonal = True
    elems = family.elements()
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if not (elems[i] * elems[j]).is_zero():
                orthogonal = False
                failures.append(
                    f"e{labels[i]} * e{labels[j]} != 0 (not orthogonal)"
                )
                break
        if not orthogonal:
            break

    total = spec.zero()
    for e in elems:
        total = total + e
    sum_is_one = total == spec.one()
    if not sum_is_one:
        failures.append("family does not sum to 1")

    dim_total = sum(it.dim for it in family.items)
    if dim_total != spec.size:
        failures.append(
            f"component dimensions sum to {dim_total}, expected {spec.size}"
        )

    return VerificationReport(
        item_checks=tuple(checks),
        orthogonal=orthogonal,
        sum_is_one=sum_is_one,
        dim_total=dim_total,
        expected_dim=spec.size,
        failures=tuple(failures),
        uncertified=tuple(uncertified),
    )


# ---------------------------------------------------------------------------
# brute force over finite fields
# ---------------------------------------------------------------------------


def enumeration_backend() -> str:
    return _kernel.BACKEND


def brute_enumerate_minimal(
    spec: AlgebraSpec, max_count: int = DEFAULT_ENUM_BUDGET
) -> List[AlgebraElement]:
    """Every minimal idempotent, found by exhausting all q^(2^n)
    coefficient vectors.  Only for finite K of size q (the fixed field
    of F:q presentations); refuses anything over budget."""
    K = spec.field
    if K.kind != FINITE:
        raise ValueError("brute-force enumeration needs a finite field")
    if K.d == 2 and K.involution != FROBENIUS:
        raise ValueError("enumeration is over K; need |K| = q")
    count = K.q**spec.size
    if count > max_count:
        raise EnumerationBudgetError(
            f"enumeration of {K.q}^{spec.size} = {count} vectors exceeds "
            f"the budget of {max_count}"
        )
    if not spec.a.is_scalar():
        raise ValueError("a must be a scalar residue")
    a_int = spec.a.coeffs[0]
    pad = (0,) * (K.d - 1)
    out = []
    for vec in _kernel.atoms(K.q, spec.n, a_int):
        coeffs = tuple(K.element((c,) + pad) for c in vec)
        out.append(AlgebraElement(spec, coeffs))
    return out


def cross_check(spec: AlgebraSpec, max_count: int = DEFAULT_ENUM_BUDGET) -> bool:
    """Does the closed-form family coincide, as a set, with the
    brute-forced minimal idempotents?"""
    from .builder import build

    enumerated = brute_enumerate_minimal(spec, max_count)
    family = build(spec, checked=False)
    want = {e.coeffs for e in enumerated}
    got = {it.element.coeffs for it in family.items}
    return want == got


# ---------------------------------------------------------------------------
# conjugate pairing against the ambient family
# ---------------------------------------------------------------------------


def _raw_key(e: AlgebraElement) -> tuple:
    return tuple(c.coeffs for c in e.coeffs)


def conjugate_pairing_check(spec: AlgebraSpec) -> bool:
    """Galois-descent consistency of the K-side family.

    Rebuild the family over the ambient field with the trivial
    involution, apply the original involution coefficient-wise, and sum
    each orbit.  The orbit sums must be exactly the K-side family.
    This exercises a completely different construction path (the
    trivial-involution cases) against the paired ones.
    """
    K = spec.field
    if K.involution == IDENTITY:
        raise ValueError("pairing check needs a nontrivial involution")
    from .builder import build

    K0 = FieldDescriptor(K.kind, IDENTITY, level=K.level, q=K.q, d=K.d)
    spec0 = AlgebraSpec(K0, spec.n, K0.element(spec.a.coeffs))
    ambient_family = build(spec0, checked=False)
    k_family = build(spec, checked=False)

    def conj(e: AlgebraElement) -> AlgebraElement:
        return spec0.element(
            K0.element(sigma(K, K.element(c.coeffs)).coeffs) for c in e.coeffs
        )

    remaining = {_raw_key(it.element): it.element for it in ambient_family.items}
    orbit_sums = set()
    while remaining:
        _, e = remaining.popitem()
        f = conj(e)
        kf = _raw_key(f)
        if kf == _raw_key(e):
            orbit_sums.add(_raw_key(e))
            continue
        if kf not in remaining:
            return False  # involution does not permute the ambient family
        remaining.pop(kf)
        orbit_sums.add(_raw_key(e + f))

    expected = {_raw_key(it.element) for it in k_family.items}
    return orbit_sums == expected
