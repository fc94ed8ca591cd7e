from fractions import Fraction

import pytest

from logchern.characters import base_bundle, ch_ring
from logchern.formulas import (
    delta2_dot,
    delta2_x,
    delta3_dot,
    delta3_x,
    delta_tilde2,
    delta_tilde3,
    ext_power_ch3,
    f4_sym,
    hc_shift_check,
    schur_ch3,
    schur_coefficients,
    sym_power_ch,
)
from logchern.symfunc import binomial, enumerate_partitions


class TestCasimirPolynomials:
    def test_standard_rep_quadratic(self):
        for r in (2, 3, 4, 7):
            assert delta2_dot((1,), r) == r * r - 1

    def test_single_row_quadratic(self):
        for r in (2, 3, 5):
            for m in range(6):
                assert delta2_dot((m,), r) == (r - 1) * m * (m + r)

    def test_column_quadratic(self):
        # (1,1) gives 2(r-2)(r+1), the wedge-square factor
        for r in (2, 3, 4, 6):
            assert delta2_dot((1, 1), r) == 2 * (r - 2) * (r + 1)

    def test_standard_rep_cubic(self):
        for r in (3, 4, 5):
            assert delta3_dot((1,), r) == (r - 2) * (r - 1) * (r + 1) * (r + 2)

    def test_single_row_cubic(self):
        for r in (3, 4, 5):
            for m in range(6):
                assert delta3_dot((m,), r) == (r - 2) * (r - 1) * m * (m + r) * (2 * m + r)

    def test_column_cubic_reproduces_exterior_factor(self):
        # f3 for (1^n) must be n(2n^2-3rn+r^2)/((r-2)(r-1)) * r_n/r
        for r in (3, 4, 5):
            for n in range(1, r + 1):
                sc = schur_coefficients((1,) * n, r)
                expect = Fraction(
                    n * (2 * n * n - 3 * r * n + r * r), (r - 2) * (r - 1)
                ) * Fraction(binomial(r, n), r)
                assert sc.f3 == expect

    def test_quadratic_nonnegative_on_partitions(self):
        for r in range(2, 6):
            for size in range(9):
                for alpha in enumerate_partitions(size, r):
                    assert delta2_dot(alpha, r) >= 0

    def test_tilde_guards(self):
        with pytest.raises(ValueError):
            delta_tilde2((1,), 1)
        with pytest.raises(ValueError):
            delta_tilde3((1,), 2)


class TestSchurCoefficients:
    def test_identity_functor(self):
        for r in (3, 4, 5):
            sc = schur_coefficients((1,), r)
            assert sc.f1 == sc.f2 == sc.f3 == 1

    def test_sym_square_rank_two(self):
        sc = schur_coefficients((2,), 2)
        # Delta_2 factor dt2 * (r_a/r)^2 = (r+1)(r+2)/2 = 6 at r = 2
        assert sc.delta2_tilde * Fraction(sc.r_alpha, 2) ** 2 == 6
        assert sc.delta3_tilde is None and sc.f3 is None

    def test_wedge_square_rank_four(self):
        sc = schur_coefficients((1, 1), 4)
        assert sc.delta2_tilde * Fraction(sc.r_alpha, 4) ** 2 == 3

    def test_f2_matches_sym_power_formula(self):
        for r in (2, 3, 4):
            for m in range(7):
                sc = schur_coefficients((m,), r)
                rm = binomial(m + r - 1, r - 1)
                assert sc.f2 == Fraction(m * (m + r), r + 1) * Fraction(rm, r)

    def test_f3_matches_sym_power_formula(self):
        for r in (3, 4, 5):
            for m in range(7):
                sc = schur_coefficients((m,), r)
                rm = binomial(m + r - 1, r - 1)
                expect = Fraction(m * (m + r) * (2 * m + r), (r + 1) * (r + 2))
                assert sc.f3 == expect * Fraction(rm, r)

    def test_rejects_bad_rank(self):
        with pytest.raises(ValueError):
            schur_coefficients((1,), 0)


class TestSymPowerSum:
    def test_m_one_is_base(self):
        for r in (2, 4):
            assert sym_power_ch(1, r, 3) == base_bundle(r, 3)

    def test_m_zero_is_trivial_line(self):
        ch = sym_power_ch(0, 3, 3)
        assert ch.rank == 1
        assert all(c.is_zero() for c in ch.components)

    def test_sym_square_rank_two(self):
        ring = ch_ring(2)
        ch = sym_power_ch(2, 2, 2)
        assert ch.rank == 3
        assert ch.ch(1) == ring.parse("3*e1")
        assert ch.ch(2) == ring.parse("1/2*e1^2 + 4*e2")

    def test_ch2_line_of_sym_table(self):
        # 1/2 (m-1)m/(r+1) (r_m/r) e1^2 + m(m+r)/(r+1) (r_m/r) e2 at (2,3)
        ring = ch_ring(3)
        ch = sym_power_ch(2, 3, 3)
        w = Fraction(6, 3)
        c_sq = Fraction(2 * 1, 2 * 4) * w
        c_e2 = Fraction(2 * 5, 4) * w
        assert ch.ch(2) == ring.parse(f"{c_sq}*e1^2 + {c_e2}*e2")

    def test_ch3_coefficients_from_double_sum(self):
        # independently derived: coefficient of e1*e2 in ch3(S^m E) is
        # C(m+r-1, m-2) + C(m+r-1, m-3); of e3 is sum over beta of
        # C(m+r-1, m-b) (b-1)! S(3, b)
        for m in (2, 3, 4):
            for r in (2, 3):
                ch = sym_power_ch(m, r, 3)
                n = m + r - 1
                mixed = binomial(n, m - 2) + binomial(n, m - 3)
                pure = (
                    binomial(n, m - 1)
                    + 3 * binomial(n, m - 2)
                    + 2 * binomial(n, m - 3)
                )
                e1e2 = (1, 1, 0)
                e3 = (0, 0, 1)
                assert ch.ch(3).coefficient(e1e2) == mixed
                assert ch.ch(3).coefficient(e3) == pure

    def test_rank_is_weyl_dimension(self):
        from logchern.symfunc import weyl_dim

        for m in range(6):
            for r in (2, 3, 4):
                assert sym_power_ch(m, r, 2).rank == weyl_dim((m,), r)


class TestTables:
    def test_ext_n_one_is_base(self):
        assert ext_power_ch3(1, 4) == base_bundle(4, 3)

    def test_ext_determinant_line(self):
        ch = ext_power_ch3(3, 3)
        ring = ch_ring(3)
        assert ch.rank == 1
        assert ch.ch(1) == ring.parse("e1")
        assert ch.ch(2) == ring.parse("1/2*e1^2")

    def test_ext_top_rank_two(self):
        ch = ext_power_ch3(2, 2)
        ring = ch_ring(2)
        assert ch.rank == 1
        assert ch.ch(1) == ring.parse("e1")
        assert ch.ch(2) == ring.parse("1/2*e1^2")

    def test_ext_degenerate_ch3_rejected(self):
        with pytest.raises(ValueError):
            ext_power_ch3(2, 2, up_to=3)

    def test_schur_alpha_one_is_base(self):
        for r in (3, 5):
            assert schur_ch3((1,), r) == base_bundle(r, 3)

    def test_schur_row_matches_sym_power_sum(self):
        for r in (3, 4):
            for m in range(6):
                up_to = 3
                assert schur_ch3((m,), r) == sym_power_ch(m, r, up_to)

    def test_schur_column_matches_ext(self):
        for r in (3, 4, 5):
            for n in range(1, r + 1):
                assert schur_ch3((1,) * n, r) == ext_power_ch3(n, r)

    def test_schur_rank_two_truncates_at_two(self):
        ch = schur_ch3((2,), 2)
        assert ch.D == 2
        assert ch.rank == 3


class TestF4:
    def test_trivial_rep(self):
        assert f4_sym(0, 3) == 0

    def test_printed_value_at_m_one(self):
        for r in (2, 3, 4, 6):
            assert f4_sym(1, r) == Fraction((r + 1) ** 2, (r + 2) * (r + 3))


class TestHCShift:
    def test_quadratic_constant_balances(self):
        # at x = (0,-1,...,1-r) (alpha = 0) both sides must give 0
        for r in (2, 3, 4):
            x = [-(i) for i in range(r)]
            assert delta2_x(x, r) == delta2_dot((), r) == 0
            if r >= 3:
                assert delta3_x(x, r) == delta3_dot((), r) == 0

    def test_origin_value(self):
        # delta2_x(0) is the negated constant of the shift
        for r in (2, 3, 5):
            assert delta2_x([0] * r, r) == -Fraction(r * r * (r * r - 1), 12)

    def test_grid_small_ranks(self):
        for k in (2, 3):
            for r in (2, 3):
                report = hc_shift_check(k, r)
                assert report.passed, report.failures
                assert report.points == 7**r

    def test_sampling_cap(self):
        report = hc_shift_check(2, 4, max_points=100, seed=5)
        assert report.passed and report.points == 100

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            hc_shift_check(4, 3)
