"""Cocycles over irrational rotations and their Birkhoff sums.

Central objects:

* :class:`AffineCocycle` -- the sawtooth phi(x) = {x} - 1/2 over x -> x+alpha,
  with exact closed forms for its Birkhoff sums
      phi^(n)(beta) = n*beta + n(n-1)/2*alpha - n/2 - sum_{j<n} floor(beta + j*alpha)
  and the decomposition of the dilated sums phi^(r)(r x) into a full-range
  affine part r^2 x - r^2/2 and an integer-coset step part.
* :class:`AffineOrbit` -- an exact orbit prefix.  The floor sequence is the
  only state; every c_n, a_n = floor(c_n) and every windowed Birkhoff sum
  phi^(q)(T^k x0) = c_{k+q} - c_k is reconstructed from it in O(1).
* :class:`FourierCocycle` -- zero-mean trigonometric cocycles with finitely
  many stored coefficients plus an analytic tail bound, the frequency
  dilation f -> f_m, and the denominator-growth ergodicity criterion.

Two independent floor engines ("direct": one isqrt decision per index;
"wrap": incremental carry tracking) exist on purpose: their exact agreement
is an acceptance-level consistency check, so they must not share logic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .surd import (
    FixedPointReal,
    IncompatibleRadicandsError,
    QuadPairValue,
    QuadraticSurd,
    exact_floor_linear,
    floor_quad_pair,
    sign_quad_pair,
    sign_sqrt,
)

__all__ = [
    "AffineCocycle",
    "AffineOrbit",
    "BirkhoffAccumulator",
    "FourierCocycle",
    "TailModel",
    "CriterionRow",
    "CriterionReport",
    "affine_closed_form",
    "birkhoff_sum",
    "ergodicity_criterion",
]


# ---------------------------------------------------------------------------
# generic Birkhoff machinery
# ---------------------------------------------------------------------------


def _rotate(x, alpha):
    if isinstance(x, (QuadraticSurd, QuadPairValue)):
        try:
            return (x + alpha).frac()
        except IncompatibleRadicandsError:
            pair = QuadPairValue.from_surd(x, x.d, alpha.d)
            return (pair + alpha).frac()
    if isinstance(x, FixedPointReal):
        a = alpha if isinstance(alpha, FixedPointReal) else FixedPointReal.from_surd(alpha)
        return (x + a).frac()
    return (x + float(alpha)) % 1.0


def birkhoff_sum(cocycle, x0, n: int):
    """n-step Birkhoff sum of the cocycle along its own rotation.

    n >= 1 sums the cocycle at x0, T x0, ..., T^(n-1) x0; n = 0 gives 0;
    n < 0 gives minus the sum at T^n x0, ..., T^-1 x0.
    """
    if n == 0:
        return cocycle.zero_value(x0)
    if n < 0:
        back = cocycle.translate_point(x0, n)
        return -birkhoff_sum(cocycle, back, -n)
    total = None
    x = x0
    for _ in range(n):
        v = cocycle.value(x)
        total = v if total is None else total + v
        x = _rotate(x, cocycle.alpha)
    return total


class BirkhoffAccumulator:
    """Streaming Birkhoff sum: one cocycle evaluation per step."""

    def __init__(self, cocycle, x0):
        self.cocycle = cocycle
        self.start = x0
        self.point = x0
        self.total = cocycle.zero_value(x0)
        self.index = 0

    def step(self) -> None:
        self.total = self.total + self.cocycle.value(self.point)
        self.point = _rotate(self.point, self.cocycle.alpha)
        self.index += 1

    def extend_to(self, n: int):
        while self.index < n:
            self.step()
        return self.total


# ---------------------------------------------------------------------------
# the affine cocycle {x} - 1/2
# ---------------------------------------------------------------------------


class AffineCocycle:
    """phi(x) = {x} - 1/2 over the rotation by alpha.

    Zero mean; total variation 2 over the circle (unit slope rise plus the
    wrap jump of -1), which is what the Denjoy-Koksma bound along
    continued-fraction denominators rests on.
    """

    total_variation = 2

    def __init__(self, alpha: QuadraticSurd):
        self.alpha = alpha

    def value(self, x):
        if isinstance(x, (QuadraticSurd, QuadPairValue)):
            return x.frac() - Fraction(1, 2)
        if isinstance(x, FixedPointReal):
            return x.frac() - FixedPointReal.from_fraction(Fraction(1, 2))
        return (x % 1.0) - 0.5

    def zero_value(self, x):
        if isinstance(x, QuadraticSurd):
            return QuadraticSurd.from_int(0)
        if isinstance(x, QuadPairValue):
            return QuadPairValue.zero(x.d1, x.d2)
        if isinstance(x, FixedPointReal):
            return FixedPointReal.from_int(0)
        return 0.0

    def translate_point(self, x, n: int):
        if isinstance(x, (QuadraticSurd, QuadPairValue)):
            return (x + n * self.alpha).frac()
        if isinstance(x, FixedPointReal):
            a = FixedPointReal.from_surd(self.alpha)
            return (x + a.mul_int(n)).frac()
        return (x + n * float(self.alpha)) % 1.0

    # -- dilated-sum decomposition ---------------------------------------

    def affine_part(self, x, r: int):
        """Full-range component r^2 x - r^2/2 of the dilated sum phi^(r)(r x)."""
        if isinstance(x, (QuadraticSurd, QuadPairValue)):
            return (r * r) * x - Fraction(r * r, 2)
        return r * r * float(x) - r * r / 2.0

    def dilated_sum(self, x, r: int):
        """phi^(r)(r x): the Birkhoff sum of phi at r x along r steps."""
        if isinstance(x, QuadraticSurd):
            return birkhoff_sum(self, ((r * x)).frac(), r)
        return birkhoff_sum(self, (r * float(x)) % 1.0, r)

    def step_part(self, x, r: int):
        """Integer-coset component of the dilated sum, defined by the identity
        phi^(r)(r x) = affine_part(x, r) - step_part(x, r).

        Equals sum_{j=0}^{r-1} floor(r x + j alpha) - r(r-1)/2 * (alpha + 1)
        and takes values in the coset  -r(r-1)/2 * alpha + Z.
        """
        return self.affine_part(x, r) - self.dilated_sum(x, r)

    def step_part_floor_form(self, x, r: int, first_index: int = 0):
        """Closed floor-sum evaluation of the step part.

        ``first_index=0`` reproduces :meth:`step_part` exactly;
        ``first_index=1`` is the variant that drops the j=0 term
        floor(r x), kept as a cross-check only (see
        :meth:`step_part_discrepancy`).
        """
        alpha = self.alpha
        if not isinstance(x, QuadraticSurd):
            raise TypeError("floor-form evaluation needs an exact point")
        total = sum(
            exact_floor_linear(j, alpha, r * x) for j in range(first_index, r)
        )
        return total - Fraction(r * (r - 1), 2) * (alpha + 1)

    def step_part_discrepancy(self, x, r: int):
        """step_part(x, r) minus its j>=1 floor-form variant.

        Always the integer floor(r x); reported, never assumed away.
        """
        diff = self.step_part(x, r) - self.step_part_floor_form(x, r, first_index=1)
        if isinstance(diff, (QuadraticSurd, QuadPairValue)):
            if isinstance(diff, QuadPairValue):
                diff = diff.to_surd()
            return int(diff.to_fraction())
        return diff

    def step_part_jumps(self, r: int) -> dict[int, int]:
        """Census of the jumps of the step part around the circle.

        The discontinuities are the points where some r x + j alpha,
        0 <= j < r, crosses an integer; the jump size at each is the number
        of simultaneous crossings (plus the wrap contribution at 0).
        Returns {jump value: count}.
        """
        alpha = self.alpha
        points: dict[QuadraticSurd, int] = {}
        for j in range(r):
            shift = (j * alpha).frac()
            for k in range(r):
                # x with r x + j alpha integer: x = (k + 1 - {j alpha}) / r mod 1
                x = ((QuadraticSurd.from_int(k + 1) - shift) / r).frac()
                points[x] = points.get(x, 0) + 1
        zero = QuadraticSurd.from_int(0)
        # wrap: total interior rise must cancel around the circle
        interior = sum(c for x, c in points.items() if x != zero)
        census: dict[int, int] = {}
        for x, c in points.items():
            jump = c if x != zero else c - interior - points.get(zero, 0)
            census[jump] = census.get(jump, 0) + 1
        return census


# ---------------------------------------------------------------------------
# exact affine orbits
# ---------------------------------------------------------------------------


def _is_mixed(alpha: QuadraticSurd, beta: QuadraticSurd) -> bool:
    return not (alpha.b == 0 or beta.b == 0 or alpha.d == beta.d)


def _direct_floors(alpha: QuadraticSurd, beta: QuadraticSurd, count: int) -> np.ndarray:
    """floor(beta + j*alpha) for 0 <= j < count, one independent decision per j."""
    out = np.empty(count, dtype=np.int64)
    den = alpha.c * beta.c
    ta, ba = alpha.a * beta.c, alpha.b * beta.c
    tb, bb = beta.a * alpha.c, beta.b * alpha.c
    if _is_mixed(alpha, beta):
        d1, d2 = alpha.d, beta.d
        for j in range(count):
            out[j] = floor_quad_pair(j * ta + tb, j * ba, bb, 0, d1, d2, den)
        return out
    d = alpha.d if alpha.b else beta.d
    for j in range(count):
        t = j * ta + tb
        b = j * ba + bb
        if b == 0:
            out[j] = t // den
        else:
            b2d = b * b * d
            m = isqrt(b2d) if b > 0 else -isqrt(b2d) - 1
            out[j] = (t + m) // den
    return out


def _wrap_floors(alpha: QuadraticSurd, beta: QuadraticSurd, count: int) -> np.ndarray:
    """floor(beta + j*alpha) for 0 <= j < count via incremental carries.

    Tracks the fractional point y_j = {beta + j*alpha} exactly through its
    integer numerators over a fixed denominator; each step decides one carry
    with a single sign test.  Independent of :func:`_direct_floors` by design.
    """
    out = np.empty(count, dtype=np.int64)
    if count == 0:
        return out
    den = alpha.c * beta.c
    a_whole, f0 = alpha.floor(), beta.floor()
    # fractional-part numerators over den
    ta = (alpha.a - a_whole * alpha.c) * beta.c
    ba = alpha.b * beta.c
    tb = (beta.a - f0 * beta.c) * alpha.c
    bb = beta.b * alpha.c
    mixed = _is_mixed(alpha, beta)
    if mixed:
        d1, d2 = alpha.d, beta.d
        t, b, r = tb, 0, bb  # y = (t + b sqrt(d1) + r sqrt(d2)) / den
    else:
        d1, d2 = (alpha.d if alpha.b else beta.d), 0
        t, b, r = tb, bb, 0  # y = (t + b sqrt(d1)) / den
    floor_cur = f0
    for j in range(count):
        out[j] = floor_cur
        t += ta
        b += ba
        over = t - den
        if mixed:
            carry = sign_quad_pair(over, b, r, 0, d1, d2) >= 0
        else:
            carry = sign_sqrt(over, b, d1) >= 0
        floor_cur += a_whole
        if carry:
            t = over
            floor_cur += 1
    return out


def _longdouble(x: QuadraticSurd) -> np.longdouble:
    """Extended-precision value of a surd (two-term double-double style)."""
    hi = float(x)
    lo = float(x - QuadraticSurd.from_fraction(Fraction(hi)))
    return np.longdouble(hi) + np.longdouble(lo)


class AffineOrbit:
    """Exact orbit prefix of the affine cocycle started at beta.

    Stores the floor sequence F_j = floor(beta + j*alpha) (j < count) plus
    its prefix sums; everything else -- exact c_n, integer parts a_n,
    float shadows, windowed sums phi^(q)(T^k beta) -- is derived.
    """

    def __init__(
        self,
        alpha: QuadraticSurd,
        beta: QuadraticSurd,
        count: int,
        engine: str = "wrap",
    ):
        if count < 1:
            raise ValueError("count must be >= 1")
        self.alpha = alpha
        self.beta = beta
        self.count = count
        if engine == "wrap":
            self.floors = _wrap_floors(alpha, beta, count)
        elif engine == "direct":
            self.floors = _direct_floors(alpha, beta, count)
        else:
            raise ValueError(f"unknown floor engine {engine!r}")
        self.engine = engine
        # S_n = sum_{j<n} F_j, n in [0, count]
        self.floor_prefix = np.zeros(count + 1, dtype=np.int64)
        np.cumsum(self.floors, out=self.floor_prefix[1:])
        self._c_float: np.ndarray | None = None
        self._a: np.ndarray | None = None
        self._mixed = not (alpha.b == 0 or beta.b == 0 or alpha.d == beta.d)
        self._den = 2 * alpha.c * beta.c

    # -- exact access -------------------------------------------------------

    def _c_numerators(self, n: int) -> tuple[int, int, int]:
        """(rational, alpha-radical, beta-radical) numerators of c_n over _den."""
        alpha, beta = self.alpha, self.beta
        s = int(self.floor_prefix[n])
        tri = n * (n - 1)
        t = (
            2 * n * beta.a * alpha.c
            + tri * alpha.a * beta.c
            - (n + 2 * s) * alpha.c * beta.c
        )
        p = tri * alpha.b * beta.c
        r = 2 * n * beta.b * alpha.c
        return t, p, r

    def _radical(self, p: int, r: int) -> tuple[int, int]:
        """Collapse the two radical numerators to one (single-field only)."""
        d = self.alpha.d if self.alpha.b else self.beta.d
        return (p + r, d) if self.alpha.d == self.beta.d else (p or r, d)

    def _value(self, t: int, p: int, r: int):
        if self._mixed:
            return QuadPairValue(t, p, r, 0, self.alpha.d, self.beta.d, self._den)
        b, d = self._radical(p, r)
        return QuadraticSurd(t, b, self._den, d)

    def c_exact(self, n: int):
        """c_n = phi^(n)(beta) as an exact value."""
        return self._value(*self._c_numerators(n))

    def a_value(self, n: int) -> int:
        """a_n = floor(c_n), decided exactly."""
        t, p, r = self._c_numerators(n)
        if self._mixed:
            return floor_quad_pair(t, p, r, 0, self.alpha.d, self.beta.d, self._den)
        b, d = self._radical(p, r)
        if b == 0:
            return t // self._den
        b2d = b * b * d
        m = isqrt(b2d) if b > 0 else -isqrt(b2d) - 1
        return (t + m) // self._den

    def window_sum_exact(self, k: int, q: int):
        """phi^(q)(T^k beta) = c_{k+q} - c_k, exact (cocycle identity)."""
        t2, p2, r2 = self._c_numerators(k + q)
        t1, p1, r1 = self._c_numerators(k)
        return self._value(t2 - t1, p2 - p1, r2 - r1)

    def window_sum_abs_bounded(self, k: int, q: int, bound: int) -> bool:
        """Exact check |phi^(q)(T^k beta)| <= bound."""
        t2, p2, r2 = self._c_numerators(k + q)
        t1, p1, r1 = self._c_numerators(k)
        t, p, r = t2 - t1, p2 - p1, r2 - r1
        hi = bound * self._den
        if self._mixed:
            d1, d2 = self.alpha.d, self.beta.d
            return (
                sign_quad_pair(t - hi, p, r, 0, d1, d2) <= 0
                and sign_quad_pair(t + hi, p, r, 0, d1, d2) >= 0
            )
        b, d = self._radical(p, r)
        return sign_sqrt(t - hi, b, d) <= 0 and sign_sqrt(t + hi, b, d) >= 0

    # -- bulk arrays --------------------------------------------------------

    @property
    def c_float(self) -> np.ndarray:
        """Float shadow of c_0..c_count.

        Built in extended precision from the exact floors; the systematic
        drift of n*alpha in double precision would otherwise reach ~1e-5
        by n = 1e6, visible in Weyl phases.
        """
        if self._c_float is None:
            n = np.arange(self.count, dtype=np.longdouble)
            y = (
                _longdouble(self.beta)
                + n * _longdouble(self.alpha)
                - self.floors.astype(np.longdouble)
            )
            vals = np.concatenate(
                (np.zeros(1, dtype=np.longdouble), np.cumsum(y - np.longdouble(0.5)))
            )
            self._c_float = vals.astype(np.float64)
        return self._c_float

    def a_array(self, upto: int | None = None) -> np.ndarray:
        """a_0..a_upto as int64 (exact floor decisions, cached full-length)."""
        upto = self.count if upto is None else upto
        if self._a is None:
            self._a = np.fromiter(
                (self.a_value(n) for n in range(self.count + 1)),
                dtype=np.int64,
                count=self.count + 1,
            )
        return self._a[: upto + 1]

    def window_sums_float(self, q: int, samples: int) -> np.ndarray:
        """phi^(q)(T^k beta) for k = 0..samples-1, as floats."""
        c = self.c_float
        if q + samples > self.count:
            raise ValueError("orbit prefix too short for requested window")
        return c[q : q + samples] - c[:samples]


def affine_closed_form(n: int, alpha: QuadraticSurd, beta: QuadraticSurd):
    """(c_n, a_n) for the affine cocycle via the exact floor-sum closed form

        c_n = n*beta + n(n-1)/2*alpha - n/2 - sum_{j=0}^{n-1} floor(beta + j*alpha),

    with a_n = floor(c_n).  For a whole prefix use :class:`AffineOrbit`,
    which maintains the running floor sum at one decision per step.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = int(_direct_floors(alpha, beta, n).sum())
    first = n * beta
    second = Fraction(n * (n - 1), 2) * alpha
    try:
        c = first + second
    except IncompatibleRadicandsError:
        d1, d2 = alpha.d, beta.d
        c = QuadPairValue.from_surd(first, d1, d2) + QuadPairValue.from_surd(
            second, d1, d2
        )
    c = c - Fraction(n, 2) - s
    return c, c.floor()

# ---------------------------------------------------------------------------
# trigonometric cocycles with tail models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailModel:
    """Analytic bound |f_hat(k)| = amplitude * |k|**(-exponent) for |k| > cutoff.

    Keeps infinite-frequency sums honest once the stored coefficients stop.
    """

    amplitude: float
    exponent: float
    cutoff: int

    def abs_sum(self, q: int, from_l: int) -> float:
        """sum_{l >= from_l} amplitude * (l q)**(-exponent)."""
        from scipy.special import zeta

        return self.amplitude * q ** (-self.exponent) * float(
            zeta(self.exponent, from_l)
        )

    def sq_sum(self, q: int, from_l: int) -> float:
        """sum_{l >= from_l} (amplitude * (l q)**(-exponent))**2."""
        from scipy.special import zeta

        return self.amplitude**2 * q ** (-2 * self.exponent) * float(
            zeta(2 * self.exponent, from_l)
        )


class FourierCocycle:
    """Zero-mean real cocycle sum_k f_hat(k) e^{2 pi i k x}, 1 <= |k| <= K.

    ``coefficients`` maps k -> f_hat(k); negative frequencies are filled in
    by conjugation so the cocycle stays real-valued.  An optional
    :class:`TailModel` extends sums over all frequencies; a cocycle that is
    honestly a trigonometric polynomial has none.
    """

    def __init__(
        self,
        alpha,
        coefficients: dict[int, complex],
        smoothness: float | None = None,
        tail: TailModel | None = None,
        claimed_nonpolynomial: bool = False,
    ):
        if 0 in coefficients:
            raise ValueError("zero-mean cocycle: drop the k = 0 coefficient")
        if coefficients and max(abs(k) for k in coefficients) > 1 << 16:
            raise ValueError(
                "stored frequencies are capped at 2**16; model the rest with a "
                "TailModel"
            )
        full: dict[int, complex] = {}
        for k, v in coefficients.items():
            v = complex(v)
            full[k] = v
            mirrored = coefficients.get(-k)
            if mirrored is None:
                full[-k] = v.conjugate()
            elif abs(complex(mirrored) - v.conjugate()) > 1e-12:
                raise ValueError(f"f_hat({-k}) must conjugate f_hat({k})")
        self.alpha = alpha
        self.coefficients = full
        self.smoothness = smoothness
        self.tail = tail
        self.claimed_nonpolynomial = claimed_nonpolynomial

    @property
    def max_frequency(self) -> int:
        return max(abs(k) for k in self.coefficients)

    @property
    def polynomial_conflict(self) -> bool:
        """User said "non-polynomial" but supplied a finite segment and no
        tail model; flagged, not rejected."""
        return self.claimed_nonpolynomial and self.tail is None

    def value(self, x) -> float:
        if isinstance(x, FixedPointReal):
            x = x.to_float()
        elif isinstance(x, (QuadraticSurd, QuadPairValue)):
            x = float(x) if isinstance(x, QuadraticSurd) else x.to_float()
        total = 0.0
        for k, v in self.coefficients.items():
            if k > 0:
                w = v * np.exp(2j * np.pi * k * x)
                total += 2.0 * w.real
        return total

    def values(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.float64)
        total = np.zeros_like(xs)
        for k, v in self.coefficients.items():
            if k > 0:
                total += 2.0 * (v * np.exp(2j * np.pi * k * xs)).real
        return total

    def zero_value(self, x) -> float:
        return 0.0

    def translate_point(self, x, n: int):
        if isinstance(x, FixedPointReal):
            a = (
                self.alpha
                if isinstance(self.alpha, FixedPointReal)
                else FixedPointReal.from_surd(self.alpha)
            )
            return (x + a.mul_int(n)).frac()
        return (float(x) + n * float(self.alpha)) % 1.0

    def frequency_dilation(self, m: int) -> "FourierCocycle":
        """The cocycle x -> sum_{i<m} f(x + i/m), which keeps exactly the
        frequencies divisible by m, scaled by m."""
        if m < 1:
            raise ValueError("m must be >= 1")
        kept = {k: m * v for k, v in self.coefficients.items() if k % m == 0}
        # a tail bound does not transfer to the dilation (support changes);
        # the dilated object carries exactly its stored coefficients
        return FourierCocycle(
            self.alpha, kept, self.smoothness, None, self.claimed_nonpolynomial
        )

    def dilation_pointwise(self, m: int, x: float) -> float:
        """Direct summation definition of the dilation, for cross-checking."""
        return sum(self.value((x + i / m) % 1.0) for i in range(m))


@dataclass(frozen=True)
class CriterionRow:
    q: int
    coefficient_sum: float  # q * sum_l |f_hat(l q)|
    l2_norm: float          # q * sqrt(sum_{l != 0} |f_hat(l q)|^2)
    ratio: float | None     # coefficient_sum / l2_norm, None when degenerate
    degenerate: bool        # no surviving frequency at this q
    satisfied: bool         # coefficient_sum <= C * l2_norm


@dataclass
class CriterionReport:
    constant: float
    rows: list[CriterionRow]
    norms_decreasing: bool
    all_satisfied: bool
    degenerate_count: int


def ergodicity_criterion(
    f: FourierCocycle, denominators: list[int], constant: float
) -> CriterionReport:
    """Denominator-growth test for skew-product ergodicity.

    For each denominator q it pairs q * sum_l |f_hat(l q)| with the dilated
    norm ||f_q||_2 = q * sqrt(sum_{l != 0} |f_hat(l q)|^2) and reports
    whether the first stays below ``constant`` times the second while the
    norms decrease to 0.  A q with no surviving frequency (trigonometric
    polynomial case) yields norm 0 and is flagged degenerate, not an error.
    """
    rows: list[CriterionRow] = []
    kmax = f.max_frequency
    for q in denominators:
        abs_sum = 0.0
        sq_sum = 0.0
        for k, v in f.coefficients.items():
            if k > 0 and k % q == 0:
                a = abs(v)
                abs_sum += 2 * a
                sq_sum += 2 * a * a
        if f.tail is not None:
            start = f.tail.cutoff // q + 1
            abs_sum += 2 * f.tail.abs_sum(q, start)
            sq_sum += 2 * f.tail.sq_sum(q, start)
        coefficient_sum = q * abs_sum
        l2 = q * float(np.sqrt(sq_sum))
        degenerate = l2 == 0.0
        ratio = None if degenerate else coefficient_sum / l2
        rows.append(
            CriterionRow(
                q=q,
                coefficient_sum=coefficient_sum,
                l2_norm=l2,
                ratio=ratio,
                degenerate=degenerate,
                satisfied=(coefficient_sum <= constant * l2) if not degenerate else False,
            )
        )
    norms = [r.l2_norm for r in rows if not r.degenerate]
    decreasing = all(b < a for a, b in zip(norms, norms[1:])) and bool(norms)
    return CriterionReport(
        constant=constant,
        rows=rows,
        norms_decreasing=decreasing,
        all_satisfied=all(r.satisfied for r in rows if not r.degenerate),
        degenerate_count=sum(r.degenerate for r in rows),
    )
