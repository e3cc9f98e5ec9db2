"""Uniquely ergodic building blocks and their orbit laws.

Points are plain values or small frozen dataclasses; maps and flows are
immutable descriptors with pure step/act methods, so orbit generation is
trivially safe to partition across workers (disjoint index ranges stitch
through the cocycle identity).

Circle coordinates accept four scalar kinds: QuadraticSurd / QuadPairValue
(exact), FixedPointReal (certified fixed point), float.  Exactness is
preserved whenever the inputs allow it; products of two irrationals from
different quadratic fields land in QuadPairValue.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .surd import (
    FixedPointReal,
    IncompatibleRadicandsError,
    QuadPairValue,
    QuadraticSurd,
    _RATIONAL_D,
)

EXACT_KINDS = (QuadraticSurd, QuadPairValue)


class EndpointCollisionError(ValueError):
    """An orbit point landed exactly on a coding-partition endpoint."""


# ---------------------------------------------------------------------------
# exact scalar glue
# ---------------------------------------------------------------------------


def exact_add(a, b):
    """Sum of two exact scalars, widening to QuadPairValue when needed."""
    try:
        return a + b
    except IncompatibleRadicandsError:
        pass
    d1 = a.d if isinstance(a, QuadraticSurd) else None
    if isinstance(a, QuadPairValue):
        return a + QuadPairValue.from_surd(b, a.d1, a.d2)
    if isinstance(b, QuadPairValue):
        return b + QuadPairValue.from_surd(a, b.d1, b.d2)
    d2 = b.d
    return QuadPairValue.from_surd(a, d1, d2) + QuadPairValue.from_surd(b, d1, d2)


def exact_mul(a, b):
    """Product of two exact scalars (at most two distinct radicands)."""
    if isinstance(a, QuadPairValue):
        return a.mul_surd(b) if isinstance(b, QuadraticSurd) else NotImplemented
    if isinstance(b, QuadPairValue):
        return b.mul_surd(a)
    try:
        return a * b
    except IncompatibleRadicandsError:
        return QuadPairValue.from_surd(a, a.d, b.d).mul_surd(b)


def mod1(x):
    """Reduce any supported scalar kind to [0, 1)."""
    if isinstance(x, EXACT_KINDS + (FixedPointReal,)):
        return x.frac()
    return float(x) % 1.0


def rotate(x, alpha):
    """One step of the rotation x -> x + alpha on the circle, exact when
    both operands are exact."""
    if isinstance(x, EXACT_KINDS) and isinstance(alpha, EXACT_KINDS):
        return mod1(exact_add(x, alpha))
    if isinstance(x, FixedPointReal):
        a = alpha if isinstance(alpha, FixedPointReal) else FixedPointReal.from_surd(alpha)
        return (x + a).frac()
    return (float(x) + float(alpha)) % 1.0


def _floor_scalar(x) -> int:
    if isinstance(x, EXACT_KINDS + (FixedPointReal,)):
        return x.floor()
    import math

    return math.floor(x)


def _as_float(x) -> float:
    if isinstance(x, QuadPairValue):
        return x.to_float()
    if isinstance(x, FixedPointReal):
        return x.to_float()
    return float(x)


def _as_fixed(x) -> FixedPointReal:
    if isinstance(x, FixedPointReal):
        return x
    if isinstance(x, QuadraticSurd):
        return FixedPointReal.from_surd(x)
    if isinstance(x, QuadPairValue):
        return FixedPointReal.from_surd(x.to_surd())
    from fractions import Fraction as _F

    return FixedPointReal.from_fraction(_F(float(x)))


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteResidue:
    """Point of the rotation-by-one on Z/mZ."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "value", self.value % self.modulus)


@dataclass(frozen=True)
class CylinderPoint:
    """Point (base, fiber) of a skew product over the circle."""

    base: object
    fiber: object


@dataclass(frozen=True)
class SuspensionPoint:
    """Point (base, roof) of a unit-roof suspension, roof in [0, 1)."""

    base: object
    roof: object


@dataclass(frozen=True)
class ProductPoint:
    components: tuple


# ---------------------------------------------------------------------------
# base maps (Z-actions) usable under a suspension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteRotation:
    """z -> z + 1 on Z/mZ."""

    modulus: int

    def start(self) -> FiniteResidue:
        return FiniteResidue(0, self.modulus)

    def iterate(self, z: FiniteResidue, k: int) -> FiniteResidue:
        return FiniteResidue(z.value + k, self.modulus)


@dataclass(frozen=True)
class CircleRotation:
    """z -> z + alpha on the circle."""

    alpha: object

    def start(self):
        return QuadraticSurd.from_int(0) if isinstance(self.alpha, EXACT_KINDS) else 0.0

    def iterate(self, z, k: int):
        if isinstance(z, EXACT_KINDS) and isinstance(self.alpha, QuadraticSurd):
            return mod1(exact_add(z, k * self.alpha))
        return (float(z) + k * _as_float(self.alpha)) % 1.0


def finite_rotation_step(i: int, modulus: int) -> int:
    """One step of the rotation by one on Z/mZ."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    return (i + 1) % modulus


def character(i: int, modulus: int) -> complex:
    """The character e^{2 pi i / m} evaluated at residue i."""
    return cmath.exp(2j * cmath.pi * (i % modulus) / modulus)


# ---------------------------------------------------------------------------
# flows (R-actions)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleTranslationFlow:
    """S_t(y) = y + speed * t on the circle."""

    speed: object

    def start(self):
        return QuadraticSurd.from_int(0) if isinstance(self.speed, EXACT_KINDS) else 0.0

    def act(self, t, y):
        if isinstance(y, EXACT_KINDS) and isinstance(t, EXACT_KINDS):
            if isinstance(self.speed, EXACT_KINDS):
                return mod1(exact_add(y, exact_mul(self.speed, t)))
        if isinstance(y, FixedPointReal) or isinstance(t, FixedPointReal):
            yf = _as_fixed(y)
            tf = _as_fixed(t)
            speed = _as_fixed(self.speed)
            return (yf + speed.mul(tf)).frac()
        return (_as_float(y) + _as_float(self.speed) * _as_float(t)) % 1.0

    def describe(self) -> dict:
        return {"kind": "circle_flow", "speed": _as_float(self.speed)}


@dataclass(frozen=True)
class SuspensionFlow:
    """Unit-roof suspension of a base map, optionally with time rescaled.

    act(t, (z, s)) = (R^floor(beta*t + s) z, {beta*t + s}); the time-change
    factor beta multiplies flow time before it enters the roof.
    """

    base: object
    time_change: object = 1

    def start(self) -> SuspensionPoint:
        roof0 = (
            QuadraticSurd.from_int(0)
            if isinstance(self.time_change, EXACT_KINDS)
            else 0.0
        )
        return SuspensionPoint(self.base.start(), roof0)

    def _scaled_time(self, t):
        beta = self.time_change
        if isinstance(beta, int):
            if isinstance(t, EXACT_KINDS):
                return beta * t if beta != 1 else t
            if isinstance(t, FixedPointReal):
                return t.mul_int(beta)
            return beta * float(t)
        if isinstance(t, EXACT_KINDS) and isinstance(beta, EXACT_KINDS):
            return exact_mul(beta, t)
        if isinstance(t, FixedPointReal) or isinstance(beta, FixedPointReal):
            return _as_fixed(beta).mul(_as_fixed(t))
        return _as_float(beta) * _as_float(t)

    def act(self, t, p: SuspensionPoint) -> SuspensionPoint:
        tau = self._scaled_time(t)
        if isinstance(tau, EXACT_KINDS) and isinstance(p.roof, EXACT_KINDS + (int, Fraction)):
            total = exact_add(tau, _lift_exact(p.roof))
            k = total.floor()
            return SuspensionPoint(self.base.iterate(p.base, k), total.frac())
        if isinstance(tau, FixedPointReal) or isinstance(p.roof, FixedPointReal):
            total = _as_fixed(tau) + _as_fixed(p.roof)
            k = total.floor()  # margin-checked; raises instead of drifting
            return SuspensionPoint(self.base.iterate(p.base, k), total.frac())
        total = _as_float(tau) + _as_float(p.roof)
        k = int(np.floor(total))
        return SuspensionPoint(self.base.iterate(p.base, k), total - k)

    def describe(self) -> dict:
        base = (
            {"kind": "finite", "l": self.base.modulus}
            if isinstance(self.base, FiniteRotation)
            else {"kind": "circle", "alpha": _as_float(self.base.alpha)}
        )
        return {
            "kind": "suspension",
            "base": base,
            "beta": _as_float(self.time_change) if self.time_change != 1 else 1,
        }


@dataclass(frozen=True)
class ProductFlow:
    flows: tuple

    def start(self) -> ProductPoint:
        return ProductPoint(tuple(f.start() for f in self.flows))

    def act(self, t, p: ProductPoint) -> ProductPoint:
        return ProductPoint(
            tuple(f.act(t, c) for f, c in zip(self.flows, p.components))
        )

    def describe(self) -> dict:
        return {"kind": "product", "components": [f.describe() for f in self.flows]}


def _lift_exact(x):
    if isinstance(x, int):
        return QuadraticSurd.from_int(x)
    if isinstance(x, Fraction):
        return QuadraticSurd.from_fraction(x)
    return x


def suspension_eval(base_map, z, s, t) -> SuspensionPoint:
    """Evaluate the suspension flow of ``base_map`` at time t from (z, s)."""
    return SuspensionFlow(base_map).act(t, SuspensionPoint(z, s))


# ---------------------------------------------------------------------------
# skew products and Rokhlin extensions
# ---------------------------------------------------------------------------


def skew_step(p: CylinderPoint, phi, alpha) -> CylinderPoint:
    """(x, g) -> (x + alpha, phi(x) + g): one step of the group extension."""
    g = p.fiber
    v = phi.value(p.base)
    if isinstance(g, EXACT_KINDS) and isinstance(v, EXACT_KINDS + (Fraction,)):
        fiber = exact_add(g, _lift_exact(v) if not isinstance(v, EXACT_KINDS) else v)
    else:
        fiber = _as_float(g) + _as_float(v)
    return CylinderPoint(rotate(p.base, alpha), fiber)


def fiber_translate(p: CylinderPoint, g) -> CylinderPoint:
    """tau_g(x, g') = (x, g + g'), the fiber translation that commutes with
    every group extension step."""
    if isinstance(p.fiber, EXACT_KINDS) and isinstance(g, EXACT_KINDS + (int, Fraction)):
        return CylinderPoint(p.base, exact_add(p.fiber, _lift_exact(g)))
    return CylinderPoint(p.base, _as_float(p.fiber) + _as_float(g))


def rokhlin_step(p: ProductPoint, phi, alpha, flow) -> ProductPoint:
    """(x, y) -> (x + alpha, S_{phi(x)}(y)): base rotation driving a flow."""
    x, y = p.components
    return ProductPoint((rotate(x, alpha), flow.act(phi.value(x), y)))


def rokhlin_orbit_law(p: ProductPoint, phi, alpha, flow, k: int) -> ProductPoint:
    """Closed form of the k-th Rokhlin iterate: (T^k x, S_{phi^(k)(x)} y)."""
    from .cocycle import birkhoff_sum

    x, y = p.components
    total = birkhoff_sum(phi, x, k)
    if isinstance(x, EXACT_KINDS):
        base = mod1(exact_add(x, k * phi.alpha))
    else:
        base = (float(x) + k * float(phi.alpha)) % 1.0
    return ProductPoint((base, flow.act(total, y)))


# ---------------------------------------------------------------------------
# Sturmian coding
# ---------------------------------------------------------------------------


def sturmian_code(x, alpha, n: int, cut=Fraction(1, 2)) -> np.ndarray:
    """Binary coding w_k of the orbit x + k*alpha by the two-interval
    partition [0, cut), [cut, 1): w_k = 0 on the first arc, 1 on the second.

    The default cut 1/2 is the partition that matches the sawtooth cocycle's
    discontinuity; its symbol frequencies tend to 1/2 but its factor
    complexity is 2m (the cut is not in the orbit of 0).  ``cut = 1 - alpha``
    gives the classical Sturmian coding with complexity m + 1.

    With exact inputs, a point landing exactly on an endpoint raises
    :class:`EndpointCollisionError` naming the index; the generic coding
    needs strict membership.
    """
    word = np.empty(n, dtype=np.uint8)
    if isinstance(x, EXACT_KINDS) and isinstance(alpha, QuadraticSurd):
        cut_exact = _lift_exact(cut)
        y = mod1(x)
        for k in range(n):
            diff = exact_add(y, -cut_exact) if isinstance(y, QuadPairValue) else None
            s = diff.sign() if diff is not None else (y - cut_exact).sign()
            if s == 0 or y.sign() == 0 and k > 0:
                raise EndpointCollisionError(
                    f"orbit point at index {k} hits a partition endpoint"
                )
            word[k] = 0 if s < 0 else 1
            y = rotate(y, alpha)
        return word
    yf = float(x) % 1.0
    af = _as_float(alpha)
    cf = _as_float(cut)
    for k in range(n):
        word[k] = 0 if yf < cf else 1
        yf = (yf + af) % 1.0
    return word


def factor_complexity(word: np.ndarray, m: int) -> int:
    """Number of distinct length-m factors of the word (brute force)."""
    view = word.tobytes()
    return len({view[i : i + m] for i in range(len(word) - m + 1)})


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


def system_from_descriptor(desc: dict, resolve_scalar) -> object:
    """Build a flow from a JSON-style descriptor.

    Kinds: {"kind": "circle_flow", "speed": SPEC},
           {"kind": "suspension", "base": BASE, "beta": SPEC},
           {"kind": "product", "components": [DESC, ...]},
    where BASE is {"kind": "finite", "l": m} or {"kind": "circle", "alpha": SPEC}
    and SPEC is anything ``resolve_scalar`` understands (preset name,
    quadruple, number).
    """
    kind = desc.get("kind")
    if kind == "circle_flow":
        return CircleTranslationFlow(resolve_scalar(desc["speed"]))
    if kind == "suspension":
        base = desc["base"]
        if base.get("kind") == "finite":
            base_map = FiniteRotation(int(base["l"]))
        elif base.get("kind") == "circle":
            base_map = CircleRotation(resolve_scalar(base["alpha"]))
        else:
            raise ValueError(f"unknown suspension base {base!r}")
        beta = desc.get("beta", 1)
        return SuspensionFlow(base_map, resolve_scalar(beta) if beta != 1 else 1)
    if kind == "product":
        return ProductFlow(
            tuple(system_from_descriptor(d, resolve_scalar) for d in desc["components"])
        )
    raise ValueError(f"unknown system kind {kind!r}")
