"""The closed-form construction: dispatch, completeness, and honest limits."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclotwist.algebra import AlgebraSpec
from cyclotwist.builder import build, thm3_case3, thm3_case4
from cyclotwist.classify import (
    EPS_COSET,
    NEGATED,
    PLAIN,
    TYPE_B,
    classify,
    h_n,
    ks_decompose,
)
from cyclotwist.grammar import parse_element, parse_field
from cyclotwist.oracle import VerificationError, verify_family

DEEP_A = "170459392,120532992,0,-120532992"  # (1 + eps_3)^32 over QR:3


def spec_of(field_spec, n, a_literal):
    K = parse_field(field_spec)
    return AlgebraSpec(K, n, parse_element(K, a_literal))


def decomposed(spec):
    s = h_n(spec.field, spec.a, spec.n)
    return s, ks_decompose(spec.field, spec.a, s)


def raw_sum(spec, raw):
    total = spec.zero()
    for _, e in raw:
        total = total + e
    return total


# -- structure of built families ----------------------------------------------


def test_checked_build_attaches_report():
    family = build(spec_of("Q", 2, "-4"))
    assert family.report is not None and family.report.ok
    assert family.labels() == [(0,), (1,)]
    assert sum(it.dim for it in family.items) == 4


def test_unchecked_build_has_no_report():
    family = build(spec_of("Q", 2, "-4"), checked=False)
    assert family.report is None


def test_labels_single_and_double_indexed():
    family = build(spec_of("Q", 3, "16"))
    assert family.labels() == [(0,), (1,), (1, 0), (1, 1)]
    family = build(spec_of("F:5", 3, "1"))
    assert [l for l in family.labels() if len(l) == 2] == [(1, 0), (1, 1)]


def test_every_dispatch_branch_is_reachable():
    fired = set()
    for field_spec, n, a in [
        ("F:5", 2, "1"),
        ("F:5", 3, "1"),
        ("Q", 2, "2"),
        ("F:3", 2, "1"),
        ("F:3", 3, "1"),
        ("Q", 2, "-1"),
        ("Q", 2, "-4"),
    ]:
        spec = spec_of(field_spec, n, a)
        cls = classify(spec.field, n)
        s, dec = decomposed(spec)
        if cls.field_type == TYPE_B:
            fired.add("split-shallow" if s <= cls.m else "split-deep")
        elif s == 0:
            fired.add("depth-0")
        elif dec.form == NEGATED:
            fired.add("negated")
        elif dec.form == EPS_COSET:
            fired.add("unit-coset")
        elif s <= cls.m - 1:
            fired.add("paired-shallow")
        else:
            fired.add("paired-deep")
    assert fired == {
        "split-shallow",
        "split-deep",
        "depth-0",
        "negated",
        "unit-coset",
        "paired-shallow",
        "paired-deep",
    }


# -- index-convention regressions ----------------------------------------------


def test_negated_family_must_start_at_zero():
    spec = spec_of("Q", 2, "-1")
    s, dec = decomposed(spec)
    assert raw_sum(spec, thm3_case4(spec, s, dec.b)) == spec.one()
    narrowed = thm3_case4(spec, s, dec.b, _first_index=1)
    assert narrowed == []  # the family has a single item, at i = 0

    spec = spec_of("QE:3", 2, "-1")
    s, dec = decomposed(spec)
    narrowed = thm3_case4(spec, s, dec.b, _first_index=1)
    assert len(narrowed) == 1
    assert raw_sum(spec, narrowed) != spec.one()


def test_deep_paired_family_needs_r0_block():
    spec = spec_of("F:3", 3, "1")
    s, dec = decomposed(spec)
    full = thm3_case3(spec, s, dec.b)
    assert raw_sum(spec, full) == spec.one()
    narrowed = thm3_case3(spec, s, dec.b, _double_from_r=1)
    assert len(narrowed) == len(full) - 2
    assert raw_sum(spec, narrowed) != spec.one()


def test_flipped_lambda_loses_k_rationality():
    # With the sign flipped the double-indexed items recombine into
    # idempotents of the ambient algebra: still idempotent, still
    # summing to 1, but no longer K-rational - verification rejects.
    spec = spec_of("F:3", 3, "1")
    s, dec = decomposed(spec)
    flipped = thm3_case3(spec, s, dec.b, _flip_lambda=True)
    assert raw_sum(spec, flipped) == spec.one()
    doubles = [e for label, e in flipped if len(label) == 2]
    assert doubles and all(not e.is_k_rational() for e in doubles)
    assert all(e * e == e for e in doubles)


# -- honest refusal on uncertifiable components ---------------------------------


def test_deep_unit_coset_family_is_sound_but_uncertified():
    spec = spec_of("QR:3", 5, DEEP_A)
    with pytest.raises(VerificationError, match="NOT CERTIFIED"):
        build(spec)
    family = build(spec, checked=False)
    assert tuple(sorted(it.dim for it in family.items)) == (
        2, 2, 2, 2, 2, 2, 4, 8, 8,
    )
    report = verify_family(spec, family)
    assert report.sound and not report.ok
    assert set(report.uncertified) == {(2, 0), (2, 1)}


def test_deep_unit_coset_octics():
    # The two depth-2 components have the conjugate non-binomial minimal
    # polynomials x^8 +- (8 + 6*sqrt2) x^4 + (68 + 48*sqrt2).
    spec = spec_of("QR:3", 5, DEEP_A)
    family = build(spec, checked=False)
    K = spec.field
    octics = {
        it.label: [c.coeffs for c in it.min_poly.coeffs]
        for it in family.items
        if it.dim == 8
    }
    zeros = [K.zero().coeffs] * 3
    assert octics[(2, 0)] == (
        [(68, 48, 0, -48)] + zeros + [(8, 6, 0, -6)] + zeros + [(1, 0, 0, 0)]
    )
    assert octics[(2, 1)] == (
        [(68, 48, 0, -48)] + zeros + [(-8, -6, 0, 6)] + zeros + [(1, 0, 0, 0)]
    )


# -- emulation edges -------------------------------------------------------------


def test_emulated_full_split():
    # m >= n+1 with identity involution: all components have dim 1
    family = build(spec_of("QC:4", 2, "16"))
    assert [it.dim for it in family.items] == [1, 1, 1, 1]


def test_emulated_paired_split():
    family = build(spec_of("QR:5", 2, "16"))
    assert tuple(sorted(it.dim for it in family.items)) == (1, 1, 2)


def test_level_one_ambient():
    # A = Q (level 1, identity): x^8 - 256 over Q splits off linear,
    # quadratic, and quartic components.
    from cyclotwist.fields import CYCLOTOMIC, IDENTITY, FieldDescriptor

    K = FieldDescriptor(CYCLOTOMIC, IDENTITY, level=1)
    family = build(AlgebraSpec(K, 3, K.scalar(256)))
    assert tuple(sorted(it.dim for it in family.items)) == (1, 1, 2, 4)


# -- invariance properties ---------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(["F:3", "F:5", "F:7"]),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=1, max_value=100),
    st.integers(min_value=1, max_value=100),
)
def test_scaling_by_full_powers_preserves_dims(qspec, n, a_seed, c_seed):
    K = parse_field(qspec)
    a = K.scalar(1 + a_seed % (K.q - 1))
    c = K.scalar(1 + c_seed % (K.q - 1))
    base = build(AlgebraSpec(K, n, a), checked=False)
    scaled = build(AlgebraSpec(K, n, a * c ** (1 << n)), checked=False)
    assert sorted(it.dim for it in base.items) == sorted(
        it.dim for it in scaled.items
    )


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(["F:3", "F:5", "F:7", "F:11", "F:13"]),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=1, max_value=200),
)
def test_random_finite_builds_verify(qspec, n, a_seed):
    K = parse_field(qspec)
    a = K.scalar(1 + a_seed % (K.q - 1))
    family = build(AlgebraSpec(K, n, a))  # checked: raises on any failure
    assert sum(it.dim for it in family.items) == 1 << n
