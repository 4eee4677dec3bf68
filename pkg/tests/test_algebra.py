"""The twisted algebra K_t<g>, minimal polynomials, and irreducibility."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclotwist.algebra import (
    AlgebraSpec,
    Binomial,
    Poly,
    binomial_irreducible,
    certify_irreducible,
    min_poly_in_component,
)
from cyclotwist.grammar import parse_element, parse_field

Q = parse_field("Q")
QR3 = parse_field("QR:3")
F3 = parse_field("F:3")
F5 = parse_field("F:5")


def spec_of(field_spec, n, a_literal):
    K = parse_field(field_spec)
    return AlgebraSpec(K, n, parse_element(K, a_literal))


# -- algebra structure --------------------------------------------------------


def test_spec_validation():
    with pytest.raises(ValueError, match="nonzero"):
        AlgebraSpec(Q, 2, Q.zero())
    with pytest.raises(ValueError, match="fixed field"):
        AlgebraSpec(Q, 2, Q.element((0, 1)))
    with pytest.raises(ValueError, match="n must be"):
        AlgebraSpec(Q, -1, Q.one())


def test_gbar_wraps_to_a():
    spec = spec_of("Q", 2, "-4")
    g = spec.gbar()
    assert g**4 == spec.scalar(Q.scalar(-4))
    assert g**5 == g.scale(Q.scalar(-4))


def test_degenerate_rank_zero():
    # n = 0: the algebra is K itself and gbar is the scalar a
    spec = spec_of("Q", 0, "2")
    assert spec.size == 1
    assert spec.gbar() == spec.one().scale(Q.scalar(2))


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=1, max_value=4),
    st.tuples(*[st.integers(0, 4)] * 4),
    st.tuples(*[st.integers(0, 4)] * 4),
    st.tuples(*[st.integers(0, 4)] * 4),
)
def test_multiplication_laws(n, a0, xs, ys, zs):
    spec = AlgebraSpec(F5, n, F5.scalar(a0))
    cut = spec.size
    x = spec.element([F5.scalar(c) for c in xs[:cut]])
    y = spec.element([F5.scalar(c) for c in ys[:cut]])
    z = spec.element([F5.scalar(c) for c in zs[:cut]])
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * spec.one() == x


# -- minimal polynomials -------------------------------------------------------


def test_min_poly_of_identity_component():
    spec = spec_of("Q", 2, "2")
    p = min_poly_in_component(spec.one(), spec.gbar())
    assert p.degree == 4
    assert str(p) == "x^4 - 2"


def test_min_poly_golden_quartic_split():
    # x^4 + 4 splits as (x^2 - 2x + 2)(x^2 + 2x + 2); the two components
    # are cut out by e = 1/2 +- (g/4 - g^3/8)
    spec = spec_of("Q", 2, "-4")
    half, quarter, eighth = Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)
    e = spec.element(
        [Q.scalar(half), Q.scalar(quarter), Q.zero(), Q.scalar(-eighth)]
    )
    assert e * e == e
    p = min_poly_in_component(e, spec.gbar())
    assert str(p) == "x^2 - 2*x + 2"


def test_min_poly_refuses_non_rational_component():
    # e = (1 - i*g^2)/2 is idempotent in Q_t<g> with a = -1, but its
    # component is cut out over Q(i) only: (g*e)^2 = i*e there.
    spec = spec_of("Q", 2, "-1")
    i = Q.element((0, 1))
    half = Q.scalar(Fraction(1, 2))
    e = spec.element([half, Q.zero(), -i * half, Q.zero()])
    assert e * e == e
    with pytest.raises(ValueError, match="K-rational component"):
        min_poly_in_component(e, spec.gbar())


def test_poly_is_monic_only():
    with pytest.raises(ValueError):
        Poly((Q.one(), Q.scalar(2)))  # 2x + 1 is not monic


def test_poly_rendering_with_vector_coefficients():
    z = QR3.zeta_pow(1)
    root2 = z + z**-1
    p = Poly((root2, QR3.one()))
    assert str(p) == "x + (0,1,0,-1)"


# -- irreducibility certificates ----------------------------------------------


@pytest.mark.parametrize(
    "c, degree, irreducible",
    [
        (-16, 4, True),  # x^4 + 16
        (-4, 4, False),  # x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
        (16, 4, False),  # x^4 - 16 = (x^2-4)(x^2+4)
        (2, 4, True),  # x^4 - 2
        (2, 8, True),  # x^8 - 2
        (-1, 2, True),  # x^2 + 1
        (4, 2, False),
    ],
)
def test_binomial_criterion_over_q(c, degree, irreducible):
    f = Binomial(degree, Q.scalar(c))
    assert binomial_irreducible(Q, f) == irreducible


def test_binomial_criterion_depends_on_field():
    # x^2 + 1 is irreducible over Q but splits over the ambient Q(i)
    f = Binomial(2, Q.scalar(-1))
    assert binomial_irreducible(Q, f, "fixed_field")
    assert not binomial_irreducible(Q, f, "ambient")


@pytest.mark.parametrize(
    "qspec, c, irreducible",
    [("F:3", -1, True), ("F:5", -1, False), ("F:5", 2, True), ("F:7", -1, True)],
)
def test_binomial_criterion_finite(qspec, c, irreducible):
    K = parse_field(qspec)
    f = Binomial(2, K.scalar(c))
    assert binomial_irreducible(K, f) == irreducible


def test_certify_ladder():
    x2_plus_1 = Poly((Q.scalar(1), Q.zero(), Q.one()))
    assert certify_irreducible(Q, x2_plus_1) is True
    x2_minus_1 = Poly((Q.scalar(-1), Q.zero(), Q.one()))
    assert certify_irreducible(Q, x2_minus_1) is False
    linear = Poly((Q.scalar(7), Q.one()))
    assert certify_irreducible(Q, linear) is True
    # non-binomial octic over an infinite field: honestly unknown
    octic = Poly(
        (Q.scalar(68),)
        + (Q.zero(),) * 3
        + (Q.scalar(8),)
        + (Q.zero(),) * 3
        + (Q.one(),)
    )
    assert certify_irreducible(Q, octic) is None


def test_certify_finite_is_exhaustive():
    # x^2 + x + 2 over F_3 has no roots and no factorization: irreducible
    K = F3
    p = Poly((K.scalar(2), K.one(), K.one()))
    assert certify_irreducible(K, p) is True
    # x^2 + x + 1 = (x - 1)^2 over F_3
    p = Poly((K.one(), K.one(), K.one()))
    assert certify_irreducible(K, p) is False
