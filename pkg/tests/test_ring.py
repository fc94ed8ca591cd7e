from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from logchern.ring import (
    GeneratorSet,
    PolyRing,
    graded_generators,
    proportion,
    root_generators,
)


def roots_ring(r, D):
    return PolyRing(root_generators(r), D)


@st.composite
def poly_strategy(draw, ring, max_terms=6, zero_constant=False):
    n = len(ring.gens)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = []
        budget = ring.truncation
        for d in ring.gens.degrees:
            e = draw(st.integers(0, budget // d))
            exps.append(e)
            budget -= e * d
        if zero_constant and not any(exps):
            continue
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 6))
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + Fraction(num, den)
    return ring.from_terms(terms)


RING23 = roots_ring(2, 3)
RING35 = roots_ring(3, 5)


class TestConstruction:
    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            GeneratorSet([("x", 1), ("x", 2)])

    def test_degree_must_be_positive(self):
        with pytest.raises(ValueError):
            GeneratorSet([("x", 0)])

    def test_zero_coefficients_dropped(self):
        p = RING23.from_terms({(1, 0): Fraction(0), (0, 1): Fraction(2)})
        assert (1, 0) not in p.terms

    def test_overflow_monomial_rejected(self):
        with pytest.raises(ValueError):
            RING23.monomial((4, 0))


class TestAdd:
    def test_additive_inverse(self):
        x = RING23.gen("a1")
        assert (x + (-x)).is_zero()

    def test_truncated_sum(self):
        ring = roots_ring(1, 2)
        x = ring.gen("a1")
        p = ring.one() + x
        q = x * x
        assert (p + q) == ring.parse("1 + a1 + a1^2")

    def test_exact_rational_addition(self):
        ring = roots_ring(1, 2)
        half_sq = ring.monomial((2,), Fraction(1, 2))
        assert half_sq + half_sq == ring.parse("a1^2")

    def test_mismatched_rings_rejected(self):
        with pytest.raises(ValueError):
            RING23.gen("a1") + RING35.gen("a1")
        with pytest.raises(ValueError):
            RING23.gen("a1") + roots_ring(2, 4).gen("a1")


class TestMul:
    def test_difference_of_squares(self):
        ring = roots_ring(1, 2)
        x = ring.gen("a1")
        assert (ring.one() + x) * (ring.one() - x) == ring.parse("1 - a1^2")

    def test_binomial_square(self):
        ring = roots_ring(2, 2)
        s = ring.gen("a1") + ring.gen("a2")
        assert s * s == ring.parse("a1^2 + 2*a1*a2 + a2^2")

    def test_truncation_kills_high_degree(self):
        ring = roots_ring(1, 1)
        x = ring.gen("a1")
        assert (x * x).is_zero()

    def test_scalar_multiplication(self):
        x = RING23.gen("a1")
        assert 3 * x == x + x + x
        assert (x / 2) * 2 == x


class TestSeries:
    def test_exp_of_zero(self):
        assert RING23.zero().exp() == RING23.one()

    def test_exp_taylor(self):
        ring = roots_ring(1, 3)
        assert ring.gen("a1").exp() == ring.parse("1 + a1 + 1/2*a1^2 + 1/6*a1^3")

    def test_exp_of_sum(self):
        ring = roots_ring(2, 2)
        s = ring.gen("a1") + ring.gen("a2")
        expect = ring.one() + s + (s * s) / 2
        assert s.exp() == expect

    def test_exp_rejects_constant_term(self):
        with pytest.raises(ValueError):
            RING23.one().exp()

    def test_log_of_one(self):
        assert RING23.one().log() == RING23.zero()

    def test_log_taylor(self):
        ring = roots_ring(1, 2)
        x = ring.gen("a1")
        assert (ring.one() + x).log() == ring.parse("a1 - 1/2*a1^2")

    def test_log_rejects_bad_constant(self):
        with pytest.raises(ValueError):
            RING23.zero().log()

    @given(st.data())
    @settings(max_examples=25, deadline=None)
    def test_exp_log_inverse(self, data):
        for D in (1, 2, 3, 4, 5, 6):
            ring = PolyRing(root_generators(2), D)
            p = ring.one() + data.draw(poly_strategy(ring, zero_constant=True))
            assert p.log().exp() == p
            q = data.draw(poly_strategy(ring, zero_constant=True))
            assert q.exp().log() == q


class TestRingAxioms:
    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_commutative_associative_distributive(self, data):
        ring = RING35
        a = data.draw(poly_strategy(ring))
        b = data.draw(poly_strategy(ring))
        c = data.draw(poly_strategy(ring))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_truncation_is_ring_map(self, data):
        big = PolyRing(root_generators(2), 6)
        a = data.draw(poly_strategy(big))
        b = data.draw(poly_strategy(big))
        assert (a * b).truncate(3) == a.truncate(3) * b.truncate(3)
        assert (a + b).truncate(3) == a.truncate(3) + b.truncate(3)

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_coefficients_stay_reduced(self, data):
        a = data.draw(poly_strategy(RING35))
        b = data.draw(poly_strategy(RING35))
        for c in (a * b).terms.values():
            assert c != 0
            assert c.denominator > 0
            assert Fraction(c.numerator, c.denominator) == c


class TestCanonicalForm:
    def test_example_from_interface(self):
        gs = GeneratorSet([("c1", 1), ("ch2", 2)])
        ring = PolyRing(gs, 3)
        p = ring.parse("1 - 11/10*c1^2 + 5*ch2")
        assert p.text() == "1 - 11/10*c1^2 + 5*ch2"
        assert p.compact() == "1-11/10*c1^2+5*ch2"

    def test_graded_lex_order(self):
        ring = PolyRing(graded_generators("e", 3), 3)
        p = ring.parse("e3 + e1*e2 + e1^3 + e1 + 2")
        assert p.text() == "2 + e1 + e1^3 + e1*e2 + e3"

    def test_unit_coefficients_and_powers(self):
        ring = roots_ring(2, 4)
        p = ring.parse("-a1 + a1^2*a2")
        assert p.text() == "-a1 + a1^2*a2"

    def test_parse_roundtrip(self):
        ring = PolyRing(graded_generators("e", 4), 4)
        for s in ("0", "e4", "1/2*e1^2 + 4*e2", "-e1 - 2*e3 + 3/7*e1*e3"):
            assert ring.parse(s).text() == s

    def test_parse_rejects_junk(self):
        with pytest.raises(ValueError):
            RING23.parse("a1 + q7")
        with pytest.raises(ValueError):
            RING23.parse("a1 ** 2")


class TestProportion:
    def test_scalar_multiple_found(self):
        ring = roots_ring(2, 2)
        y = ring.parse("a1^2 - 4*a1*a2")
        ok, lam = proportion(y.scale(Fraction(-7, 3)), y)
        assert ok and lam == Fraction(-7, 3)

    def test_not_proportional(self):
        ring = roots_ring(2, 2)
        ok, lam = proportion(ring.parse("a1^2"), ring.parse("a1^2 + a2^2"))
        assert not ok and lam is None

    def test_zero_cases(self):
        ring = roots_ring(2, 2)
        z = ring.zero()
        assert proportion(z, z) == (True, None)
        assert proportion(ring.gen("a1"), z) == (False, None)
        ok, lam = proportion(z, ring.gen("a1"))
        assert ok and lam == 0
