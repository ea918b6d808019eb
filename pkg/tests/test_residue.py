"""Residue fields, reductions, root-of-unity predicates and the tame residue of Δ."""

import itertools
import random

import pytest

from skewverify.field_tower import ALPHA, PI, KElem
from skewverify.randoms import random_uniformizer
from skewverify.residue import (
    F2,
    F7,
    F8,
    FiniteField,
    InsufficientPrecisionError,
    NoWitnessError,
    ResidueError,
    ResidueSeries,
    cubic_is_irreducible,
    delta_residue,
    mu_in_Fq,
    poly_over,
    reduce_f_at_residue,
    reduce_minpoly_mod,
    residue_map,
    roots,
    tame_delta_residue,
    total_ramification_witness,
    total_ramification_witness_7,
)


def has_linear_factor_by_division(coeffs, p):
    """Oracle: synthetic division of a monic cubic by (x − r) for every r."""
    for r in range(p):
        rem = 0
        for c in coeffs:
            rem = (rem * r + c) % p
        if rem == 0:
            return True
    return False


def clmul_mod(a, b):
    """Oracle for F₈: carry-less product of bit vectors reduced by x³+x²+1 (0b1101)."""
    prod = 0
    for i in range(3):
        if b >> i & 1:
            prod ^= a << i
    for deg in (4, 3):
        if prod >> deg & 1:
            prod ^= 0b1101 << (deg - 3)
    return prod


class TestExamples:
    def test_minpoly_mod_2_irreducible(self):
        m = reduce_minpoly_mod(2)
        assert m == poly_over(F2, 1, 1, 0, 1)
        assert cubic_is_irreducible(m, F2)

    def test_minpoly_mod_7_is_a_cube(self):
        assert reduce_minpoly_mod(7) == poly_over(F7, 1, 1, 5, 6)
        r = total_ramification_witness_7()
        assert r == F7(2)

    def test_minpoly_mod_3_is_not_a_cube(self):
        with pytest.raises(NoWitnessError):
            total_ramification_witness(3)

    def test_f_rootless_at_two(self):
        f = reduce_f_at_residue("two")
        a = F8.gen
        assert f == poly_over(F8, 1, a, a + 1, 1)
        assert roots(f, F8) == []

    def test_f_rootless_at_pi(self):
        f = reduce_f_at_residue("pi")
        assert f == poly_over(F7, 1, 0, 4, 1)
        assert roots(f, F7) == []

    def test_residue_of_pi_at_pi_is_zero(self):
        assert residue_map(PI, "pi") == F7(0)

    def test_residue_of_alpha(self):
        assert residue_map(ALPHA, "pi") == F7(2)
        assert residue_map(ALPHA, "two") == F8.gen

    def test_non_integral_element_rejected(self):
        with pytest.raises(ResidueError):
            residue_map(KElem("1/7"), "pi")
        with pytest.raises(ResidueError):
            residue_map(KElem("1/2"), "two")

    def test_unknown_prime_tag(self):
        with pytest.raises(ValueError):
            residue_map(ALPHA, "three")


def test_residue_map_at_pi_is_a_ring_map():
    rng = random.Random(3)
    for _ in range(50):
        a = KElem(*(rng.randint(-20, 20) for _ in range(3)))
        b = KElem(*(rng.randint(-20, 20) for _ in range(3)))
        for tag in ("pi", "two"):
            assert residue_map(a * b, tag) == residue_map(a, tag) * residue_map(b, tag)
            assert residue_map(a + b, tag) == residue_map(a, tag) + residue_map(b, tag)


def test_random_cubics_over_F7_against_division_oracle():
    rng = random.Random(4)
    for _ in range(20):
        c = [1] + [rng.randrange(7) for _ in range(3)]
        poly = poly_over(F7, *c)
        assert cubic_is_irreducible(poly, F7) == (not has_linear_factor_by_division(c, 7))


def test_F8_multiplication_against_clmul():
    def bits(n):
        return F8(tuple(n >> i & 1 for i in range(3)))

    for a, b in itertools.product(range(8), repeat=2):
        assert bits(a) * bits(b) == bits(clmul_mod(a, b))


def test_F8_is_a_field():
    nonzero = [x for x in F8.elements() if x]
    assert len(nonzero) == 7
    assert all(x * x.inverse() == F8.one for x in nonzero)
    assert F8.primitive_element.multiplicative_order() == 7


def test_invalid_fields_rejected():
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(2, (1, 1, 1, 1))  # x³+x²+x+1 has the root 1


class TestMu:
    @pytest.mark.parametrize(
        "n,q,expected",
        [(9, 7, False), (3, 2, False), (3, 7, True), (2, 7, True), (6, 7, True), (7, 8, True), (3, 8, False)],
    )
    def test_values(self, n, q, expected):
        assert mu_in_Fq(n, q) is expected

    def test_agrees_with_element_orders(self):
        for field in (F2, F7, F8):
            orders = {x.multiplicative_order() for x in field.elements() if x}
            for n in range(2, 10):
                if n % field.p:
                    assert mu_in_Fq(n, field.order) == (n in orders)

    @pytest.mark.parametrize("n,q", [(3, 6), (2, 1), (7, 7), (1, 7), (2, 8)])
    def test_errors(self, n, q):
        with pytest.raises(ValueError):
            mu_in_Fq(n, q)


class TestTameDelta:
    def test_simple_example(self):
        a = ResidueSeries(F7, 1, [1, 1] + [0] * 14)  # s(1 + s)
        assert tame_delta_residue(7, 3, a) == F7(2)

    @pytest.mark.parametrize("n,expected", [(2, 6), (3, 2), (6, 3)])
    def test_independent_of_uniformizer(self, n, expected):
        rng = random.Random(n)
        zeta = F7.root_of_unity(n)
        assert zeta == F7(expected)
        assert zeta.multiplicative_order() == n
        for _ in range(50):
            a = random_uniformizer(rng, F7)
            assert tame_delta_residue(7, n, a) == zeta

    def test_over_F8(self):
        rng = random.Random(8)
        zeta = F8.root_of_unity(7)
        for _ in range(20):
            assert tame_delta_residue(8, 7, random_uniformizer(rng, F8)) == zeta

    def test_cocycle(self):
        rng = random.Random(5)
        zeta = F7.root_of_unity(3)
        for _ in range(20):
            a = random_uniformizer(rng, F7)
            b = ResidueSeries(F7, 0, [rng.randrange(1, 7)] + [rng.randrange(7) for _ in range(15)])
            ab = a * b
            assert delta_residue(ab, zeta) == delta_residue(a, zeta) * delta_residue(b, zeta)
            assert delta_residue(b, zeta) == F7.one

    def test_errors(self):
        a = ResidueSeries(F7, 1, [1] * 16)
        with pytest.raises(ValueError):
            tame_delta_residue(7, 4, a)
        with pytest.raises(ValueError):
            tame_delta_residue(7, 3, ResidueSeries(F7, 2, [1] * 16))
        with pytest.raises(ValueError):
            tame_delta_residue(7, 3, a, zeta=F7(1))
        with pytest.raises(ValueError):
            tame_delta_residue(8, 3, a)
        with pytest.raises(InsufficientPrecisionError):
            delta_residue(ResidueSeries(F7, 0, [0] * 4), F7(2))


def test_series_inverse_round_trip():
    rng = random.Random(6)
    for _ in range(20):
        a = random_uniformizer(rng, F7)
        prod = a * a.inverse()
        assert prod.start == 0
        assert prod.coeffs == (F7.one,) + (F7.zero,) * (prod.precision - 1)
