"""Rotations, Sturmian coding, skew products, suspensions, Rokhlin steps."""

import random
from fractions import Fraction

import numpy as np
import pytest

from cocyclelab.surd import (
    FixedPointReal,
    QuadPairValue,
    QuadraticSurd,
    preset,
)
from cocyclelab.cocycle import AffineCocycle, AffineOrbit, birkhoff_sum
from cocyclelab.dynsys import (
    CircleRotation,
    CircleTranslationFlow,
    CylinderPoint,
    EndpointCollisionError,
    FiniteResidue,
    FiniteRotation,
    ProductFlow,
    ProductPoint,
    SuspensionFlow,
    SuspensionPoint,
    character,
    exact_add,
    factor_complexity,
    fiber_translate,
    finite_rotation_step,
    mod1,
    rokhlin_orbit_law,
    rokhlin_step,
    rotate,
    skew_step,
    sturmian_code,
    suspension_eval,
    system_from_descriptor,
)

GOLDEN = preset("golden")
SQRT2M1 = preset("sqrt2m1")
ZERO = QuadraticSurd.from_int(0)


def surd_grid(count, step=GOLDEN):
    return [(QuadraticSurd.from_int(k) * step).frac() for k in range(count)]


class ZeroCocycle:
    """Stub cocycle phi = 0 over the golden rotation."""

    alpha = GOLDEN

    def value(self, x):
        return QuadraticSurd.from_int(0)

    def zero_value(self, x):
        return QuadraticSurd.from_int(0)

    def translate_point(self, x, n):
        return mod1(exact_add(x, n * self.alpha))


class TestRotation:
    def test_zero_plus_alpha(self):
        assert rotate(ZERO, GOLDEN) == GOLDEN

    def test_ten_applications_are_one_jump(self):
        x = ZERO
        for _ in range(10):
            x = rotate(x, GOLDEN)
        assert x == mod1(10 * GOLDEN)

    def test_orbit_equidistributes(self):
        # Kolmogorov-Smirnov distance to uniform, plus a Weyl-sum check
        n = 10**6
        pts = np.mod(np.arange(n, dtype=np.float64) * float(GOLDEN), 1.0)
        pts.sort()
        grid = (np.arange(1, n + 1)) / n
        ks = float(np.max(np.abs(pts - grid)))
        assert ks < 0.01
        weyl = abs(np.exp(2j * np.pi * pts).mean())
        assert weyl < 0.01


class TestSturmianCoding:
    def test_word_prefix_at_golden(self):
        # memberships of {k alpha}: 0, .618, .236, .854, .472
        word = sturmian_code(ZERO, GOLDEN, 5)
        assert list(word) == [0, 1, 0, 1, 0]

    def test_half_cut_frequency(self):
        word = sturmian_code(ZERO, GOLDEN, 100_000)
        assert abs(word.mean() - 0.5) < 0.01

    def test_classical_cut_complexity(self):
        word = sturmian_code(ZERO, GOLDEN, 10_000, cut=1 - GOLDEN)
        for m in range(1, 17):
            assert factor_complexity(word, m) == m + 1

    def test_half_cut_complexity_is_2m(self):
        # the half-circle partition is not in the orbit closure of the cut,
        # so the coding is quasi-Sturmian with complexity 2m
        word = sturmian_code(ZERO, GOLDEN, 10_000)
        for m in range(2, 9):
            assert factor_complexity(word, m) == 2 * m

    def test_endpoint_collision_named(self):
        x = mod1(Fraction(1, 2) - 3 * GOLDEN + 2)
        x = mod1(QuadraticSurd.from_fraction(Fraction(1, 2)) - 3 * GOLDEN)
        with pytest.raises(EndpointCollisionError, match="index 3"):
            sturmian_code(x, GOLDEN, 10)

    def test_float_path_matches_exact_generically(self):
        w_exact = sturmian_code(SQRT2M1, GOLDEN, 2000)
        w_float = sturmian_code(float(SQRT2M1), float(GOLDEN), 2000)
        assert np.array_equal(w_exact, w_float)


class TestSkewProduct:
    phi = AffineCocycle(GOLDEN)

    def test_fiber_accumulates_birkhoff_sum(self):
        p = CylinderPoint(SQRT2M1, ZERO)
        for n in (1, 2, 3, 10, 40):
            q = p
            for _ in range(n):
                q = skew_step(q, self.phi, GOLDEN)
            want = birkhoff_sum(self.phi, QuadPairValue.from_surd(SQRT2M1, 5, 2), n)
            got = q.fiber
            if isinstance(got, QuadraticSurd):
                got = QuadPairValue.from_surd(got, 5, 2)
            assert got == want

    def test_zero_steps_identity(self):
        p = CylinderPoint(GOLDEN, ZERO)
        assert p == CylinderPoint(GOLDEN, ZERO)

    def test_commutes_with_fiber_translation(self):
        rng = random.Random(3)
        for _ in range(100):
            x = (QuadraticSurd.from_int(rng.randint(0, 999)) * GOLDEN).frac()
            p = CylinderPoint(x, QuadraticSurd.from_fraction(Fraction(rng.randint(-5, 5), 3)))
            g = Fraction(rng.randint(-7, 7), 5)
            lhs = fiber_translate(skew_step(p, self.phi, GOLDEN), g)
            rhs = skew_step(fiber_translate(p, g), self.phi, GOLDEN)
            assert lhs == rhs


class TestSuspension:
    def test_time_zero_is_identity(self):
        R = FiniteRotation(5)
        p = suspension_eval(R, FiniteResidue(2, 5), QuadraticSurd.from_fraction(Fraction(1, 3)), ZERO)
        assert p == SuspensionPoint(FiniteResidue(2, 5), QuadraticSurd.from_fraction(Fraction(1, 3)))

    def test_unit_time_advances_base(self):
        R = FiniteRotation(2)
        p = suspension_eval(R, FiniteResidue(0, 2), ZERO, QuadraticSurd.from_int(1))
        assert p == SuspensionPoint(FiniteResidue(1, 2), ZERO)

    def test_flow_law_exact(self):
        rng = random.Random(9)
        flow = SuspensionFlow(FiniteRotation(3), SQRT2M1)
        for _ in range(1000):
            t1 = mod1(QuadraticSurd.from_int(rng.randint(-50, 50)) * GOLDEN) + rng.randint(0, 3)
            t2 = mod1(QuadraticSurd.from_int(rng.randint(-50, 50)) * GOLDEN) + rng.randint(0, 3)
            s = mod1(QuadraticSurd.from_int(rng.randint(0, 100)) * GOLDEN)
            p = SuspensionPoint(FiniteResidue(rng.randint(0, 2), 3), s)
            one = flow.act(t1, flow.act(t2, p))
            both = flow.act(exact_add(t1, t2), p)
            assert one == both

    def test_flow_law_fixed_mode_tolerance(self):
        rng = random.Random(10)
        flow = CircleTranslationFlow(float(SQRT2M1))
        for _ in range(1000):
            t1, t2 = rng.uniform(-20, 20), rng.uniform(-20, 20)
            y = rng.random()
            one = flow.act(t1, flow.act(t2, y))
            both = flow.act(t1 + t2, y)
            delta = abs(one - both)
            assert min(delta, 1 - delta) < 1e-12

    def test_start_and_descriptor(self):
        flow = SuspensionFlow(FiniteRotation(2), GOLDEN)
        assert flow.start() == SuspensionPoint(FiniteResidue(0, 2), ZERO)
        desc = flow.describe()
        assert desc["kind"] == "suspension" and desc["base"]["l"] == 2

    def test_time_zero_identity_every_kind(self):
        flows = [
            CircleTranslationFlow(SQRT2M1),
            SuspensionFlow(FiniteRotation(3), GOLDEN),
            ProductFlow((CircleTranslationFlow(GOLDEN), SuspensionFlow(FiniteRotation(2), SQRT2M1))),
        ]
        for flow in flows:
            p = flow.act((3 * GOLDEN).frac(), flow.start())
            assert flow.act(ZERO, p) == p

    def test_fixed_backend_suspension_matches_exact(self):
        flow = SuspensionFlow(FiniteRotation(5), SQRT2M1)
        t = (QuadraticSurd.from_int(7) * GOLDEN).frac() + 2
        exact = flow.act(t, flow.start())
        fixed = flow.act(FixedPointReal.from_surd(t),
                         SuspensionPoint(FiniteRotation(5).start(), FixedPointReal.from_int(0)))
        assert fixed.base == exact.base
        roof_exact = exact.roof.to_float() if hasattr(exact.roof, "to_float") else float(exact.roof)
        assert abs(fixed.roof.to_float() - roof_exact) < 1e-12


class TestRokhlinExtension:
    phi = AffineCocycle(GOLDEN)

    @pytest.mark.parametrize(
        "flow",
        [
            CircleTranslationFlow(SQRT2M1),
            SuspensionFlow(FiniteRotation(2), SQRT2M1),
            ProductFlow((CircleTranslationFlow(SQRT2M1), SuspensionFlow(FiniteRotation(3), GOLDEN))),
        ],
        ids=["circle", "suspension", "product"],
    )
    def test_iterates_match_closed_law(self, flow):
        start = ProductPoint((SQRT2M1, flow.start()))
        cur = start
        for k in range(1, 65):
            cur = rokhlin_step(cur, self.phi, GOLDEN, flow)
            if k in (1, 2, 8, 32, 64):
                assert cur == rokhlin_orbit_law(start, self.phi, GOLDEN, flow, k)

    def test_zero_cocycle_freezes_fiber(self):
        flow = CircleTranslationFlow(SQRT2M1)
        p = ProductPoint((GOLDEN, (3 * SQRT2M1).frac()))
        for _ in range(10):
            q = rokhlin_step(p, ZeroCocycle(), GOLDEN, flow)
            assert q.components[1] == p.components[1]
            p = q

    def test_circle_flow_fiber_closed_form(self):
        # fiber after n steps = y0 + speed * phi^(n)(x0) mod 1
        flow = CircleTranslationFlow(SQRT2M1)
        y0 = (2 * SQRT2M1).frac()
        p = ProductPoint((GOLDEN, y0))
        from cocyclelab.dynsys import exact_mul

        cur = p
        for n in range(1, 30):
            cur = rokhlin_step(cur, self.phi, GOLDEN, flow)
            total = birkhoff_sum(self.phi, GOLDEN, n)
            want = mod1(exact_add(y0, exact_mul(SQRT2M1, total)))
            got = cur.components[1]
            if type(got) is not type(want):
                got = QuadPairValue.from_surd(got, want.d1, want.d2)
            assert got == want


class TestFiniteRotationAndCharacters:
    def test_step_and_full_cycle(self):
        assert finite_rotation_step(0, 2) == 1
        i = 3
        for _ in range(7):
            i = finite_rotation_step(i, 7)
        assert i == 3

    def test_parity_observable_of_order_two(self):
        vals = [character(i, 2) for i in range(4)]
        assert np.allclose(vals, [1, -1, 1, -1], atol=1e-12)

    def test_character_sum_vanishes(self):
        for m in (2, 3, 5, 12):
            assert abs(sum(character(i, m) for i in range(m))) < 1e-12

    def test_suspension_observable_cross_evaluation(self):
        # the time-changed suspension over Z/l evaluated at the sequence c_n
        # shows the residue floor(beta * c_n) mod l in its base coordinate
        l = 3
        beta = SQRT2M1
        flow = SuspensionFlow(FiniteRotation(l), beta)
        orbit = AffineOrbit(GOLDEN, ZERO, 400)
        p0 = flow.start()
        for n in (1, 2, 3, 10, 100, 399):
            c = orbit.c_exact(n)
            moved = flow.act(c, p0)
            residue = moved.base.value
            if isinstance(c, QuadraticSurd):
                scaled = (beta * c) if beta.d == c.d else QuadPairValue.from_surd(c, c.d, beta.d).mul_surd(beta)
            else:
                scaled = c.mul_surd(beta)
            want = scaled.floor() % l
            assert residue == want
            assert abs(character(residue, l) - np.exp(2j * np.pi * want / l)) < 1e-12


class TestDescriptors:
    def resolve(self, spec):
        if isinstance(spec, str):
            return preset(spec)
        return spec

    def test_suspension_descriptor(self):
        flow = system_from_descriptor(
            {"kind": "suspension", "base": {"kind": "finite", "l": 2}, "beta": "golden"},
            self.resolve,
        )
        assert isinstance(flow, SuspensionFlow)
        assert flow.base.modulus == 2 and flow.time_change == GOLDEN

    def test_product_descriptor(self):
        flow = system_from_descriptor(
            {
                "kind": "product",
                "components": [
                    {"kind": "circle_flow", "speed": "sqrt2m1"},
                    {"kind": "suspension", "base": {"kind": "circle", "alpha": "golden"}},
                ],
            },
            self.resolve,
        )
        assert isinstance(flow, ProductFlow) and len(flow.flows) == 2
        assert isinstance(flow.flows[1].base, CircleRotation)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            system_from_descriptor({"kind": "odometer"}, self.resolve)
