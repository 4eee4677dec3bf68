"""The twisted group algebra K_t<g> and its exact linear algebra.

K_t<g> is K[g]/(g^(2^n) - a): a commutative algebra with basis
1, g, ..., g^(2^n - 1) whose multiplication wraps around with a factor
of a.  Elements are stored with *ambient* coefficients so that the same
code paths serve K-rational elements and ambient-side constructions;
K-rationality is a property we can always test after the fact.

Also here: minimal polynomials of elements inside a component e*K_t<g>
(computed by incremental Gaussian elimination, no factoring), and
irreducibility certificates for the binomial and quadratic polynomials
that the closed-form construction produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Union

from .fields import (
    FINITE,
    POWER_TEST_CAP,
    AmbientElement,
    AmbientError,
    FieldDescriptor,
    is_in_k,
    kth_power_test_branching,
)

Coeffish = Union["AmbientElement", int, Fraction]


@dataclass(frozen=True)
class AlgebraSpec:
    """K_t<g> = K[g]/(g^(2^n) - a) for a unit a of K."""

    field: FieldDescriptor
    n: int
    a: AmbientElement

    def __post_init__(self):
        if not 0 <= self.n <= POWER_TEST_CAP:
            raise ValueError(f"n must be in [0, {POWER_TEST_CAP}]")
        if self.a.owner != self.field:
            raise AmbientError("a does not belong to the given field")
        if self.a.is_zero():
            raise ValueError("a must be nonzero")
        if not is_in_k(self.field, self.a):
            raise ValueError("a must lie in the fixed field K")

    @property
    def size(self) -> int:
        return 1 << self.n

    # -- element construction -------------------------------------------

    def _coerce(self, c: Coeffish) -> AmbientElement:
        if isinstance(c, AmbientElement):
            if c.owner != self.field:
                raise AmbientError("coefficient from a different field")
            return c
        return self.field.scalar(c)

    def element(self, coeffs) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self._coerce(c) for c in coeffs))

    def zero(self) -> "AlgebraElement":
        return self.element([0] * self.size)

    def one(self) -> "AlgebraElement":
        return self.gbar(0)

    def scalar(self, c: Coeffish) -> "AlgebraElement":
        out = [self.field.zero()] * self.size
        out[0] = self._coerce(c)
        return AlgebraElement(self, tuple(out))

    def gbar(self, e: int = 1) -> "AlgebraElement":
        """The basis monomial g^e, reduced by g^(2^n) = a.  e >= 0."""
        if e < 0:
            raise ValueError("exponent must be >= 0")
        wraps, r = divmod(e, self.size)
        out = [self.field.zero()] * self.size
        out[r] = self.a**wraps
        return AlgebraElement(self, tuple(out))


@dataclass(frozen=True)
class AlgebraElement:
    spec: AlgebraSpec
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.spec.size:
            raise ValueError(
                f"expected {self.spec.size} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, AmbientElement) or c.owner != self.spec.field:
                raise AmbientError("coefficients must come from the base field")

    def _lift(self, other) -> Optional["AlgebraElement"]:
        if isinstance(other, AlgebraElement):
            if other.spec != self.spec:
                raise AmbientError("operands live in different algebras")
            return other
        if isinstance(other, (AmbientElement, int, Fraction)):
            return self.spec.scalar(other)
        return None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_k_rational(self) -> bool:
        return all(is_in_k(self.spec.field, c) for c in self.coeffs)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.spec, tuple(x + y for x, y in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.spec, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.spec, tuple(x - y for x, y in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c: Coeffish) -> "AlgebraElement":
        cc = self.spec._coerce(c)
        return AlgebraElement(self.spec, tuple(cc * x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        if isinstance(other, (AmbientElement, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        acc, base = self.spec.one(), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (AmbientElement, int, Fraction)):
            other = self.spec.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __repr__(self):
        body = " + ".join(
            f"({c!r})*g^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()
        )
        return f"<{body or '0'}>"


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Twisted cyclic convolution: exponents wrap with a factor of a."""
    if x.spec != y.spec:
        raise AmbientError("operands live in different algebras")
    spec = x.spec
    size = spec.size
    out = [spec.field.zero()] * size
    for i, xi in enumerate(x.coeffs):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y.coeffs):
            if yj.is_zero():
                continue
            k = i + j
            if k < size:
                out[k] = out[k] + xi * yj
            else:
                out[k - size] = out[k - size] + spec.a * (xi * yj)
    return AlgebraElement(spec, tuple(out))


def subalgebra_generator(spec: AlgebraSpec, s: int, b: AmbientElement) -> AlgebraElement:
    """The unit h = b^(-1) g^(2^(n-s)); when a = b^(2^s) it has order 2^s
    and generates the group algebra K<h> inside K_t<g>."""
    if not 0 <= s <= spec.n:
        raise ValueError("s must be in [0, n]")
    return spec.gbar(1 << (spec.n - s)).scale(b**-1)


# ---------------------------------------------------------------------------
# polynomials over K (stored with ambient coefficients, low degree first)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Binomial:
    """x^degree - constant."""

    degree: int
    constant: AmbientElement


@dataclass(frozen=True)
class Poly:
    """A monic polynomial with coefficients in the ambient field,
    low degree first; coeffs[-1] == 1."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("empty polynomial")
        one = self.coeffs[-1].owner.one()
        if self.coeffs[-1] != one:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_k_rational(self, K: FieldDescriptor) -> bool:
        return all(is_in_k(K, c) for c in self.coeffs)

    def as_binomial(self) -> Optional[Binomial]:
        if self.degree < 1:
            return None
        if any(not c.is_zero() for c in self.coeffs[1:-1]):
            return None
        return Binomial(self.degree, -self.coeffs[0])

    def __str__(self):
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == self.degree:
                parts.append(mono)
                continue
            if c.is_scalar():
                lead = str(c.coeffs[0])
                sign = "-" if lead.startswith("-") else "+"
                mag = lead.lstrip("-")
                body = mag if k == 0 else (f"{mono}" if mag == "1" else f"{mag}*{mono}")
            else:
                sign = "+"
                vec = ",".join(str(x) for x in c.coeffs)
                body = f"({vec})" if k == 0 else f"({vec})*{mono}"
            parts.append(f"{sign} {body}")
        return " ".join(parts)


def min_poly_in_component(e: AlgebraElement, x: AlgebraElement) -> Poly:
    """Minimal polynomial of z = x*e over K inside the component e*K_t<g>.

    Incremental Gaussian elimination on the powers e, z, z^2, ... over
    the ambient field: the first power that becomes linearly dependent
    yields the monic relation directly.  The resulting coefficients must
    land in K; if they do not, z does not generate a K-rational
    component and we refuse rather than return a wrong answer.
    """
    spec = e.spec
    K = spec.field
    if e.is_zero() or e * e != e:
        raise ValueError("e must be a nonzero idempotent")
    z = x * e
    zero, one = K.zero(), K.one()

    rows = []  # (pivot index, echelon vector, expression in powers of z)
    cur = e
    k = 0
    while True:
        vec = list(cur.coeffs)
        combo = [zero] * k + [one]
        for pivot, rvec, rcombo in rows:
            f = vec[pivot]
            if f.is_zero():
                continue
            vec = [v - f * r for v, r in zip(vec, rvec)]
            small = [f * c for c in rcombo] + [zero] * (len(combo) - len(rcombo))
            combo = [c - s for c, s in zip(combo, small)]
        if all(v.is_zero() for v in vec):
            poly = Poly(tuple(combo))
            if not poly.is_k_rational(K):
                raise ValueError("x*e does not generate a K-rational component")
            return poly
        pivot = next(i for i, v in enumerate(vec) if not v.is_zero())
        inv = vec[pivot].inverse()
        vec = [inv * v for v in vec]
        combo = [inv * c for c in combo]
        rows.append((pivot, vec, combo))
        cur = cur * z
        k += 1
        assert k <= spec.size, "no linear relation within the algebra dimension"


# ---------------------------------------------------------------------------
# irreducibility certificates
# ---------------------------------------------------------------------------


def binomial_irreducible(
    K: FieldDescriptor, f: Binomial, where: str = "fixed_field"
) -> bool:
    """Exact irreducibility of x^(2^k) - c over the fixed field K
    (or over A with where="ambient").

    For 2-power degree the classical criterion is two membership tests:
    the binomial is irreducible iff c is not a square, and additionally
    (when the degree is divisible by 4) c is not of the form -4*u^4.
    Both tests reduce to branching power tests with the witness confined
    to the requested field.
    """
    if f.degree < 1:
        raise ValueError("binomial degree must be >= 1")
    if f.degree == 1:
        return True
    if f.degree & (f.degree - 1):
        raise ValueError("only 2-power degrees are supported")
    c = f.constant
    if kth_power_test_branching(K, c, 2, where) is not None:
        return False
    if f.degree % 4 == 0:
        quarter = c / K.scalar(-4)
        if kth_power_test_branching(K, quarter, 4, where) is not None:
            return False
    return True


def _fixed_field_elements(K: FieldDescriptor):
    return [x for x in K.iter_ambient() if is_in_k(K, x)]


def _poly_rem(num: list, den: list, zero) -> list:
    """Remainder of num by monic den (coefficient lists, low first)."""
    out = list(num)
    dd = len(den) - 1
    for k in range(len(out) - 1, dd - 1, -1):
        f = out[k]
        if f.is_zero():
            continue
        out[k] = zero
        for j in range(dd):
            out[k - dd + j] = out[k - dd + j] - f * den[j]
    return out[:dd]


def _finite_poly_irreducible(K: FieldDescriptor, poly: Poly) -> bool:
    """Trial division by every monic divisor of degree <= deg/2 over the
    (finite) fixed field.  Exhaustive, hence a certificate."""
    base = _fixed_field_elements(K)
    zero, one = K.zero(), K.one()
    coeffs = list(poly.coeffs)
    if not coeffs[0]:
        return poly.degree == 1
    for ddeg in range(1, poly.degree // 2 + 1):
        for tail in product(base, repeat=ddeg):
            den = list(tail) + [one]
            rem = _poly_rem(coeffs, den, zero)
            if all(r.is_zero() for r in rem):
                return False
    return True


def certify_irreducible(K: FieldDescriptor, poly: Poly) -> Optional[bool]:
    """True/False when irreducibility over K can be certified exactly,
    None when no certificate applies (never a guess).

    The ladder: degree 1; 2-power binomials; quadratics via the
    discriminant (characteristic != 2); finite fields by exhaustive
    trial division.
    """
    if poly.degree < 1:
        raise ValueError("constants have no irreducibility")
    if poly.degree == 1:
        return True
    bino = poly.as_binomial()
    if bino is not None and (bino.degree & (bino.degree - 1)) == 0:
        return binomial_irreducible(K, bino)
    if poly.degree == 2:
        c0, c1 = poly.coeffs[0], poly.coeffs[1]
        disc = c1 * c1 - 4 * c0
        return kth_power_test_branching(K, disc, 2, "fixed_field") is None
    if K.kind == FINITE:
        return _finite_poly_irreducible(K, poly)
    return None
