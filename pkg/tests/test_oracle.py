"""Verification oracles: structural checks, brute force, conjugate pairing."""

from dataclasses import replace

import pytest

from cyclotwist.algebra import AlgebraSpec
from cyclotwist.builder import build
from cyclotwist.grammar import parse_element, parse_field
from cyclotwist.oracle import (
    EnumerationBudgetError,
    brute_enumerate_minimal,
    conjugate_pairing_check,
    cross_check,
    verify_family,
)


def spec_of(field_spec, n, a_literal):
    K = parse_field(field_spec)
    return AlgebraSpec(K, n, parse_element(K, a_literal))


# -- brute-force enumeration -----------------------------------------------------


def test_enumeration_golden_f5():
    # The two atoms of F_5[g]/(g^2 - 1) are 3 + 3g and 3 + 2g (i.e. the
    # halves (1 +- g)/2 with 1/2 = 3 mod 5).
    spec = spec_of("F:5", 1, "1")
    atoms = brute_enumerate_minimal(spec)
    got = {tuple(c.coeffs[0] for c in e.coeffs) for e in atoms}
    assert got == {(3, 3), (3, 2)}


@pytest.mark.parametrize("a", ["1", "2"])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_enumerated_atoms_resolve_identity(n, a):
    spec = spec_of("F:3", n, a)
    atoms = brute_enumerate_minimal(spec)
    total = spec.zero()
    for e in atoms:
        assert e * e == e and not e.is_zero()
        total = total + e
    assert total == spec.one()
    for i, e in enumerate(atoms):
        for f in atoms[i + 1 :]:
            assert (e * f).is_zero()


def test_enumeration_budget():
    spec = spec_of("F:7", 3, "1")  # 7^8 = 5,764,801 candidate vectors
    with pytest.raises(EnumerationBudgetError, match="budget"):
        brute_enumerate_minimal(spec)
    with pytest.raises(EnumerationBudgetError):
        cross_check(spec, max_count=10**6)


def test_enumeration_rejects_infinite_fields():
    with pytest.raises(ValueError):
        brute_enumerate_minimal(spec_of("Q", 1, "2"))


@pytest.mark.parametrize("qspec, n", [("F:3", 2), ("F:3", 3), ("F:5", 2), ("F:7", 1)])
def test_cross_check_small_grid(qspec, n):
    K = parse_field(qspec)
    for a0 in range(1, K.q):
        assert cross_check(AlgebraSpec(K, n, K.scalar(a0)))


# -- structural verification -------------------------------------------------------


def test_verify_accepts_correct_family():
    spec = spec_of("F:3", 2, "1")
    report = verify_family(spec, build(spec, checked=False))
    assert report.ok and report.sound
    assert report.orthogonal and report.sum_is_one
    assert report.dim_total == report.expected_dim == 4
    assert report.headline() == "PASS"


def test_verify_flags_duplicate_items():
    spec = spec_of("F:3", 2, "1")
    family = build(spec, checked=False)
    dup = replace(family, items=family.items + (family.items[0],))
    report = verify_family(spec, dup)
    assert not report.sound
    assert any("duplicate labels" in f for f in report.failures)
    assert not report.orthogonal  # e*e = e != 0 across the duplicate pair
    assert not report.sum_is_one


def test_verify_flags_missing_item():
    spec = spec_of("F:3", 2, "1")
    family = build(spec, checked=False)
    short = replace(family, items=family.items[1:])
    report = verify_family(spec, short)
    assert not report.sound
    assert not report.sum_is_one
    assert report.dim_total < report.expected_dim


def test_verify_flags_corrupted_coefficient():
    spec = spec_of("F:3", 2, "1")
    family = build(spec, checked=False)
    item = family.items[0]
    bad_el = spec.element([c + spec.field.one() for c in item.element.coeffs])
    bad = replace(family, items=(replace(item, element=bad_el),) + family.items[1:])
    report = verify_family(spec, bad)
    checks = {c.label: c for c in report.item_checks}
    assert not checks[item.label].idempotent
    assert not report.sound


def test_verify_flags_wrong_dim():
    spec = spec_of("F:3", 2, "1")
    family = build(spec, checked=False)
    item = family.items[0]
    bad = replace(family, items=(replace(item, dim=item.dim + 1),) + family.items[1:])
    report = verify_family(spec, bad)
    checks = {c.label: c for c in report.item_checks}
    assert not checks[item.label].dim_consistent
    assert not report.sound


# -- conjugate pairing ----------------------------------------------------------------


@pytest.mark.parametrize(
    "field_spec, n, a",
    [
        ("Q", 2, "-4"),
        ("Q", 3, "16"),
        ("QE:3", 2, "-1"),
        ("QE:3", 3, "16"),
        ("QR:3", 3, "16"),
        ("F:3", 2, "1"),
        ("F:3", 3, "1"),
        ("F:7", 2, "3"),
    ],
)
def test_pairing_across_types(field_spec, n, a):
    assert conjugate_pairing_check(spec_of(field_spec, n, a))


def test_pairing_needs_nontrivial_involution():
    with pytest.raises(ValueError, match="involution"):
        conjugate_pairing_check(spec_of("F:5", 1, "1"))
