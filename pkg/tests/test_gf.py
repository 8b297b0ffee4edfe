"""Field construction, arithmetic axioms, and quadratic extension contexts."""

from __future__ import annotations

import pytest

from ffrat.counting import divisors, euler_phi
from ffrat.gf import (FieldSizeError, field_of_order, is_prime, make_ext,
                      make_field, mult_order)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                      47, 53, 59]


def test_prime_field_modulus_convention():
    F = make_field(2, 1)
    assert F.modulus == (0, 1)
    assert list(F.elements) == [0, 1]


def test_gf4_modulus_is_least_irreducible_quadratic():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)


def test_gf8_gf9_moduli_are_irreducible_and_least():
    # Frozen from an independent scan of all monic cubics/quadratics,
    # ordered by constant-coefficient-first comparison.
    assert make_field(2, 3).modulus == (1, 0, 1, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)


def test_make_field_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        make_field(4, 1)


def test_make_field_rejects_bad_degree():
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_size_bound_enforced():
    with pytest.raises(FieldSizeError):
        make_field(2, 3, size_bound=4)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_of_order(q):
    assert field_of_order(q).q == q


@pytest.mark.parametrize("q", [1, 6, 10, 12, 100])
def test_field_of_order_rejects_non_prime_powers(q):
    with pytest.raises(ValueError):
        field_of_order(q)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = list(F.elements)
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a in els:
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_generator_is_primitive(q):
    F = field_of_order(q)
    assert mult_order(F, F.generator) == q - 1
    seen = set()
    x = 1
    for _ in range(q - 1):
        seen.add(x)
        x = F.mul(x, F.generator)
    assert seen == set(F.units)


def test_mult_order_examples():
    assert mult_order(make_field(5, 1), 2) == 4
    assert mult_order(make_field(7, 1), 6) == 2
    for q in SMALL_ORDERS:
        assert mult_order(field_of_order(q), 1) == 1


@pytest.mark.parametrize("q", [5, 7, 9, 13])
def test_order_distribution_matches_euler_phi(q):
    F = field_of_order(q)
    counts = {}
    for a in F.units:
        d = mult_order(F, a)
        counts[d] = counts.get(d, 0) + 1
    assert counts == {d: euler_phi(d) for d in divisors(q - 1)}


def test_element_coeffs_roundtrip():
    F = make_field(3, 2)
    for a in F.elements:
        assert F.element_from_coeffs(F.element_coeffs(a)) == a
    assert F.element_coeffs(5) == (2, 1)


def test_pow_and_div():
    F = make_field(2, 2)
    for a in F.units:
        assert F.pow(a, 3) == 1
        assert F.div(a, a) == 1
    assert F.pow(0, 0) == 1
    assert F.pow(0, 5) == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_ext_norm_one_count(q):
    ctx = make_ext(field_of_order(q))
    assert len(ctx.norm_one_elements()) == q + 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_ext_frobenius_involution_and_fixed_field(q):
    F = field_of_order(q)
    ctx = make_ext(F)
    ext = ctx.ext
    image = {ctx.embed(a) for a in F.elements}
    assert len(image) == q
    for x in ext.elements:
        assert ctx.frobenius(ctx.frobenius(x)) == x
    fixed = {x for x in ext.elements if ctx.frobenius(x) == x}
    assert fixed == image


@pytest.mark.parametrize("q", [2, 3, 4])
def test_ext_embedding_is_homomorphism(q):
    F = field_of_order(q)
    ctx = make_ext(F)
    ext = ctx.ext
    for a in F.elements:
        for b in F.elements:
            assert ctx.embed(F.add(a, b)) == ext.add(ctx.embed(a), ctx.embed(b))
            assert ctx.embed(F.mul(a, b)) == ext.mul(ctx.embed(a), ctx.embed(b))


def test_frobenius_is_qth_power():
    F = make_field(2, 2)
    ctx = make_ext(F)
    for x in ctx.ext.elements:
        assert ctx.frobenius(x) == ctx.ext.pow(x, 4)


def test_make_field_is_cached():
    assert make_field(3, 1) is make_field(3, 1)
    assert field_of_order(9) is make_field(3, 2)
