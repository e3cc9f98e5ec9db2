"""Birkhoff sums, closed forms, the dilated-sum decomposition, and the
trigonometric-cocycle criterion.

Oracles: term-by-term summation (independent of the closed forms), direct
coefficient summation for the criterion quantities, and mpmath where floats
need certification.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from cocyclelab.surd import QuadPairValue, QuadraticSurd, preset
from cocyclelab.cocycle import (
    AffineCocycle,
    AffineOrbit,
    BirkhoffAccumulator,
    FourierCocycle,
    TailModel,
    affine_closed_form,
    birkhoff_sum,
    ergodicity_criterion,
)

GOLDEN = preset("golden")
SQRT2M1 = preset("sqrt2m1")
ZERO = QuadraticSurd.from_int(0)

PAIRS = [
    (GOLDEN, GOLDEN),
    (GOLDEN, SQRT2M1),
    (SQRT2M1, GOLDEN),
    (SQRT2M1, SQRT2M1),
]


class TestBirkhoffSums:
    def test_zero_steps(self):
        phi = AffineCocycle(GOLDEN)
        assert birkhoff_sum(phi, SQRT2M1, 0) == QuadraticSurd.from_int(0)

    def test_golden_three_steps_from_zero(self):
        phi = AffineCocycle(GOLDEN)
        c3 = birkhoff_sum(phi, ZERO, 3)
        assert c3 == 3 * GOLDEN - Fraction(5, 2)

    def test_negative_steps_definition(self):
        # phi^(-k)(x) = -(phi(T^-k x) + ... + phi(T^-1 x))
        phi = AffineCocycle(GOLDEN)
        x = (QuadraticSurd.from_int(2) * GOLDEN).frac()
        for k in (1, 2, 5):
            direct = QuadraticSurd.from_int(0)
            for j in range(-k, 0):
                direct = direct + phi.value(phi.translate_point(x, j))
            assert birkhoff_sum(phi, x, -k) == -direct

    def test_cocycle_identity_exact(self):
        # phi^(m+n)(x) = phi^(m)(x) + phi^(n)(T^m x) over random signed steps
        phi = AffineCocycle(GOLDEN)
        rng = random.Random(12)
        for _ in range(100):
            m = rng.randint(-50, 50)
            n = rng.randint(-50, 50)
            x = (QuadraticSurd.from_int(rng.randint(0, 10**6)) * GOLDEN).frac()
            lhs = birkhoff_sum(phi, x, m + n)
            rhs = birkhoff_sum(phi, x, m) + birkhoff_sum(
                phi, phi.translate_point(x, m), n
            )
            assert lhs == rhs

    def test_accumulator_matches_batch(self):
        phi = AffineCocycle(SQRT2M1)
        acc = BirkhoffAccumulator(phi, GOLDEN)
        for n in (1, 4, 9, 33):
            total = acc.extend_to(n)
            assert total == birkhoff_sum(phi, GOLDEN, n)


class TestClosedForm:
    def test_first_value_mixed(self):
        c1, a1 = affine_closed_form(1, GOLDEN, SQRT2M1)
        assert a1 == -1  # 0 < beta < 1/2 so c_1 = beta - 1/2 < 0
        expected = QuadPairValue.from_surd(SQRT2M1, 5, 2) - Fraction(1, 2)
        assert c1 == expected

    @pytest.mark.parametrize("alpha,beta", PAIRS)
    def test_matches_streaming_accumulator(self, alpha, beta):
        phi = AffineCocycle(alpha)
        acc = BirkhoffAccumulator(phi, beta)
        for n in (1, 2, 3, 7, 20, 111, 500):
            total = acc.extend_to(n)
            c, a = affine_closed_form(n, alpha, beta)
            if isinstance(total, QuadraticSurd) and isinstance(c, QuadPairValue):
                total = QuadPairValue.from_surd(total, c.d1, c.d2)
            assert c == total
            assert a == total.floor()

    def test_zero_base_point_reduces_to_floor_sum_form(self):
        # c_n = n(n-1)/2 alpha - n/2 - sum_{j=1}^{n-1} floor(j alpha)
        for n in (1, 2, 3, 10, 57):
            c, _ = affine_closed_form(n, GOLDEN, ZERO)
            s = sum((j * GOLDEN).floor() for j in range(1, n))
            assert c == Fraction(n * (n - 1), 2) * GOLDEN - Fraction(n, 2) - s


class TestAffineOrbit:
    @pytest.mark.parametrize("alpha,beta", PAIRS)
    def test_engines_agree(self, alpha, beta):
        w = AffineOrbit(alpha, beta, 4000, engine="wrap")
        d = AffineOrbit(alpha, beta, 4000, engine="direct")
        assert np.array_equal(w.floors, d.floors)

    def test_c_exact_matches_closed_form(self):
        orbit = AffineOrbit(GOLDEN, SQRT2M1, 600)
        for n in (1, 2, 17, 600):
            c, a = affine_closed_form(n, GOLDEN, SQRT2M1)
            assert orbit.c_exact(n) == c
            assert orbit.a_value(n) == a

    def test_c_float_accuracy(self):
        orbit = AffineOrbit(GOLDEN, SQRT2M1, 20_000)
        for n in (1, 100, 19_999):
            exact = orbit.c_exact(n)
            approx = exact.to_float() if hasattr(exact, "to_float") else float(exact)
            assert abs(orbit.c_float[n] - approx) < 1e-9

    def test_window_sum_is_shifted_birkhoff(self):
        orbit = AffineOrbit(GOLDEN, SQRT2M1, 300)
        phi = AffineCocycle(GOLDEN)
        for k, q in ((0, 5), (3, 21), (100, 55)):
            start = phi.translate_point(
                QuadPairValue.from_surd(SQRT2M1, 5, 2), k
            )
            direct = birkhoff_sum(phi, start, q)
            assert orbit.window_sum_exact(k, q) == direct

    def test_denjoy_koksma_bound_sample(self):
        orbit = AffineOrbit(GOLDEN, ZERO, 1200)
        for q in (1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144):
            for k in range(0, 1000, 97):
                assert orbit.window_sum_abs_bounded(k, q, 2)

    def test_range_stitching_by_cocycle_identity(self):
        # a worker starting at T^m beta with offset c_m reproduces the tail
        whole = AffineOrbit(GOLDEN, SQRT2M1, 400)
        m = 123
        start = AffineCocycle(GOLDEN).translate_point(
            QuadPairValue.from_surd(SQRT2M1, 5, 2), m
        )
        offset = whole.c_exact(m)
        part = BirkhoffAccumulator(AffineCocycle(GOLDEN), start)
        for n in (10, 77, 277):
            assert offset + part.extend_to(n) == whole.c_exact(m + n)


class TestDilatedSumDecomposition:
    phi = AffineCocycle(GOLDEN)

    def grid(self, count=40):
        return [(QuadraticSurd.from_int(k) * GOLDEN).frac() for k in range(count)]

    def test_r1_degenerates(self):
        # affine part at r=1 is phi itself on [0,1); step part vanishes
        for x in self.grid(10):
            assert self.phi.affine_part(x, 1) == self.phi.value(x)
            assert self.phi.step_part(x, 1) == QuadraticSurd.from_int(0)

    @pytest.mark.parametrize("r", [2, 3, 5])
    def test_identity_exact(self, r):
        for x in self.grid():
            lhs = self.phi.dilated_sum(x, r)
            rhs = self.phi.affine_part(x, r) - self.phi.step_part(x, r)
            assert lhs == rhs

    @pytest.mark.parametrize("r", [2, 3, 5])
    def test_step_part_floor_form_matches_identity_form(self, r):
        for x in self.grid():
            assert self.phi.step_part(x, r) == self.phi.step_part_floor_form(x, r)

    @pytest.mark.parametrize("r", [2, 3, 5])
    def test_step_part_coset(self, r):
        # values lie in the single coset -r(r-1)/2 alpha + Z: adding
        # r(r-1)/2 alpha must land exactly on an integer
        coset = Fraction(r * (r - 1), 2) * GOLDEN
        for x in self.grid():
            shifted = self.phi.step_part(x, r) + coset
            assert shifted.frac() == QuadraticSurd.from_int(0)

    @pytest.mark.parametrize("r", [2, 3, 5])
    def test_discrepancy_census_is_floor_rx(self, r):
        # dropping the j=0 floor term changes the value by exactly floor(r x)
        for x in self.grid():
            assert self.phi.step_part_discrepancy(x, r) == (r * x).floor()

    def test_jump_census_reported(self):
        census = self.phi.step_part_jumps(2)
        assert sum(census.values()) == 4  # r^2 discontinuities on the circle
        assert sum(j * c for j, c in census.items()) == 0  # net zero around


class TestFrequencyDilation:
    alpha = GOLDEN

    def base(self, kmax=8):
        coeffs = {k: 1.0 / k**3 for k in range(1, kmax + 1)}
        return FourierCocycle(self.alpha, coeffs)

    def test_identity_at_m1(self):
        f = self.base()
        assert f.frequency_dilation(1).coefficients == f.coefficients

    def test_single_frequency_dies_at_m2(self):
        f = FourierCocycle(self.alpha, {1: 0.5})
        f2 = f.frequency_dilation(2)
        assert f2.coefficients == {}

    def test_pointwise_sum_matches_fourier_form(self):
        f = self.base(9)
        f3 = f.frequency_dilation(3)
        rng = random.Random(5)
        for _ in range(100):
            x = rng.random()
            assert abs(f.dilation_pointwise(3, x) - f3.value(x)) < 1e-10

    def test_conjugate_symmetry_enforced(self):
        with pytest.raises(ValueError):
            FourierCocycle(self.alpha, {1: 1.0, -1: 2.0})
        with pytest.raises(ValueError):
            FourierCocycle(self.alpha, {0: 1.0})

    def test_frequency_cap(self):
        with pytest.raises(ValueError, match="2\\*\\*16"):
            FourierCocycle(self.alpha, {(1 << 16) + 1: 1.0})
        FourierCocycle(self.alpha, {1 << 16: 1.0})  # boundary allowed


class TestErgodicityCriterion:
    def powerlaw(self, kmax=64, exponent=2.5, tail=True):
        coeffs = {k: k**-exponent for k in range(1, kmax + 1)}
        model = TailModel(1.0, exponent, kmax) if tail else None
        return FourierCocycle(GOLDEN, coeffs, tail=model, claimed_nonpolynomial=tail)

    def test_l2_norm_against_direct_summation(self):
        # ||f_2|| = 2 sqrt(2 sum_{l>=1} |f_hat(2l)|^2), truncated model
        f = self.powerlaw(64, tail=False)
        report = ergodicity_criterion(f, [2], constant=2.0)
        direct = 2 * np.sqrt(2 * sum(abs(f.coefficients[2 * l]) ** 2 for l in range(1, 33)))
        assert abs(report.rows[0].l2_norm - direct) < 1e-12

    def test_coefficient_sum_against_direct_summation(self):
        f = self.powerlaw(64, tail=False)
        report = ergodicity_criterion(f, [2], constant=2.0)
        direct = 2 * 2 * sum(abs(f.coefficients[2 * l]) for l in range(1, 33))
        assert abs(report.rows[0].coefficient_sum - direct) < 1e-12

    def test_trigonometric_polynomial_degenerates(self):
        f = self.powerlaw(8, tail=False)
        report = ergodicity_criterion(f, [2, 3, 13], constant=2.0)
        by_q = {r.q: r for r in report.rows}
        assert by_q[13].degenerate and by_q[13].l2_norm == 0.0
        assert not by_q[2].degenerate
        assert report.degenerate_count == 1

    def test_ratio_bounded_along_fibonacci(self):
        f = self.powerlaw(2**12)
        qs = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]
        report = ergodicity_criterion(f, qs, constant=2.0)
        assert report.all_satisfied and report.norms_decreasing
        ratios = [r.ratio for r in report.rows]
        assert max(ratios) < 2.0

    def test_polynomial_conflict_flag(self):
        f = FourierCocycle(GOLDEN, {1: 1.0}, claimed_nonpolynomial=True)
        assert f.polynomial_conflict
        assert not self.powerlaw().polynomial_conflict
