"""Exact arithmetic for quadratic irrationals.

A quadratic surd is stored as (a + b*sqrt(d)) / c with arbitrary-precision
integers a, b, c and a squarefree radicand d.  All predicates that matter for
the rest of the package -- signs, floors, fractional parts, continued-fraction
expansion -- are decided by integer comparisons only; floating point never
touches a decision path.

Two escape hatches extend the reach of the exact layer:

* sign/floor decisions for values of the form
  (t + b*sqrt(d1) + c*sqrt(d2) + e*sqrt(d1*d2)) / den,
  which arise when two surds over different radicands are combined linearly
  (e.g. j*alpha + beta with alpha in Q(sqrt 5) and beta in Q(sqrt 2)).
* :class:`FixedPointReal`, a 128-bit fixed-point number carrying a running
  error bound, for rotation numbers that are only specified by their partial
  quotients and therefore have no surd representation.  It refuses to answer
  a floor/comparison whose decision margin is smaller than the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt


class IncompatibleRadicandsError(ValueError):
    """Raised when an operation would need to mix sqrt(d1) and sqrt(d2)
    inside a single :class:`QuadraticSurd`."""


class PrecisionExhausted(ArithmeticError):
    """Raised by the fixed-point backend when a decision margin falls below
    the accumulated error bound."""


# canonical radicand stored for rational values (b == 0); any fixed
# non-square works, it only keeps equality a tuple comparison
_RATIONAL_D = 2


def _squarefree_decompose(d: int) -> tuple[int, int]:
    """Return (s, d0) with d = s*s*d0 and d0 squarefree."""
    s, d0 = 1, 1
    n = d
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                d0 *= f
        f += 1 if f == 2 else 2
    d0 *= n
    return s, d0


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_sqrt(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d); d must not be a perfect square if b != 0."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    sa, sb = _sign(a), _sign(b)
    if sa == sb:
        return sa
    # opposite signs: compare a^2 with b^2 d (cannot tie, d is non-square)
    return sa * _sign(a * a - b * b * d)


def sign_quad_pair(t: int, b: int, c: int, e: int, d1: int, d2: int) -> int:
    """Exact sign of t + b*sqrt(d1) + c*sqrt(d2) + e*sqrt(d1*d2).

    d1, d2 must be distinct squarefree integers >= 2, which makes the four
    radicals rationally independent and every comparison decidable.
    """
    # value = X + sqrt(d2) * Y with X = t + b sqrt(d1), Y = c + e sqrt(d1)
    s_y = sign_sqrt(c, e, d1)
    s_x = sign_sqrt(t, b, d1)
    if s_y == 0:
        return s_x
    if s_x == 0:
        return s_y
    if s_x == s_y:
        return s_x
    # compare X^2 against d2 * Y^2 inside Q(sqrt(d1))
    u = t * t + b * b * d1 - d2 * (c * c + e * e * d1)
    v = 2 * (t * b - d2 * c * e)
    return s_x * sign_sqrt(u, v, d1)


_SQRT_CACHE: dict[tuple[int, int], int] = {}


def _scaled_sqrt(d: int, g: int) -> int:
    """floor(2**g * sqrt(d)), cached per (d, g)."""
    key = (d, g)
    s = _SQRT_CACHE.get(key)
    if s is None:
        s = isqrt(d << (2 * g))
        _SQRT_CACHE[key] = s
    return s


def _term_bounds(coef: int, scaled_root: int) -> tuple[int, int]:
    # coef * sqrt(...) scaled by 2**g lies in [lo, hi]
    if coef >= 0:
        return coef * scaled_root, coef * (scaled_root + 1)
    return coef * (scaled_root + 1), coef * scaled_root


def floor_quad_pair(
    t: int, b: int, c: int, e: int, d1: int, d2: int, den: int
) -> int:
    """Exact floor of (t + b*sqrt(d1) + c*sqrt(d2) + e*sqrt(d1*d2)) / den.

    Uses certified integer bounds at increasing precision; the value is
    irrational whenever any of b, c, e is nonzero, so the bounds eventually
    separate it from the nearest integer.
    """
    if den < 0:
        t, b, c, e, den = -t, -b, -c, -e, -den
    if b == 0 and c == 0 and e == 0:
        return t // den
    g = 64
    while True:
        lo = hi = t << g
        for coef, d in ((b, d1), (c, d2), (e, d1 * d2)):
            if coef:
                l, h = _term_bounds(coef, _scaled_sqrt(d, g))
                lo += l
                hi += h
        q = den << g
        fl, fh = lo // q, hi // q
        if fl == fh:
            return fl
        g *= 2


class QuadraticSurd:
    """Exact value (a + b*sqrt(d)) / c.

    Canonical form: c > 0, d squarefree (d = 2 and b = 0 for rationals),
    gcd(a, b, c) = 1.  Instances are immutable and hashable; equality is a
    tuple comparison.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if b != 0:
            if d <= 0:
                raise ValueError("radicand must be positive")
            s, d0 = _squarefree_decompose(d)
            if d0 == 1:
                # perfect-square radicand: value is rational
                a, b, d = a + b * s, 0, _RATIONAL_D
            else:
                b, d = b * s, d0
        if b == 0:
            d = _RATIONAL_D
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("QuadraticSurd is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "QuadraticSurd":
        return cls(n, 0, 1, _RATIONAL_D)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "QuadraticSurd":
        return cls(fr.numerator, 0, fr.denominator, _RATIONAL_D)

    @classmethod
    def sqrt_int(cls, d: int) -> "QuadraticSurd":
        return cls(0, 1, 1, d)

    # -- predicates --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational value")
        return Fraction(self.a, self.c)

    def _compatible(self, other: "QuadraticSurd") -> int:
        """Common radicand for a field operation, or raise."""
        if self.b == 0:
            return other.d
        if other.b == 0 or self.d == other.d:
            return self.d
        raise IncompatibleRadicandsError(
            f"cannot combine sqrt({self.d}) with sqrt({other.d}) in one surd"
        )

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "QuadraticSurd | None":
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, int):
            return QuadraticSurd.from_int(other)
        if isinstance(other, Fraction):
            return QuadraticSurd.from_fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._compatible(o)
        return QuadraticSurd(
            self.a * o.c + o.a * self.c,
            self.b * o.c + o.b * self.c,
            self.c * o.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._compatible(o)
        # (a1 + b1 r)(a2 + b2 r) with r^2 = d
        return QuadraticSurd(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            self.c * o.c,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        if self.a == 0 and self.b == 0:
            raise ZeroDivisionError("inverse of zero")
        # c / (a + b r) = c (a - b r) / (a^2 - b^2 d)
        n = self.a * self.a - self.b * self.b * self.d
        return QuadraticSurd(self.c * self.a, -self.c * self.b, n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- order and rounding --------------------------------------------------

    def sign(self) -> int:
        return sign_sqrt(self.a, self.b, self.d)

    def floor(self) -> int:
        if self.b == 0:
            return self.a // self.c
        b2d = self.b * self.b * self.d
        m = isqrt(b2d) if self.b > 0 else -isqrt(b2d) - 1
        return (self.a + m) // self.c

    def frac(self) -> "QuadraticSurd":
        return self - self.floor()

    def scaled_floor(self, g: int) -> int:
        """Exact floor(value * 2**g)."""
        if self.b == 0:
            return (self.a << g) // self.c
        b2d = (self.b * self.b * self.d) << (2 * g)
        m = isqrt(b2d) if self.b > 0 else -isqrt(b2d) - 1
        return ((self.a << g) + m) // self.c

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    def __float__(self):
        return approx_f64(self)

    def __repr__(self):
        if self.b == 0:
            return f"QuadraticSurd({self.a}/{self.c})"
        return f"QuadraticSurd(({self.a}{self.b:+d}*sqrt({self.d}))/{self.c})"


def approx_f64(x: QuadraticSurd) -> float:
    """Nearest-double approximation, derived from an isqrt-based expansion."""
    g = 96
    return float(Fraction(x.scaled_floor(g), 1 << g))


def frac_part(x: QuadraticSurd) -> QuadraticSurd:
    """x - floor(x), in canonical form, value in [0, 1)."""
    return x.frac()


def exact_floor_linear(j: int, alpha: QuadraticSurd, beta: QuadraticSurd) -> int:
    """Exact floor(j*alpha + beta), with no floating point on the decision path.

    alpha and beta may live over different radicands; the decision is then
    made in the composite field by sign analysis of squared comparisons.
    """
    if alpha.b == 0 or beta.b == 0 or alpha.d == beta.d:
        return (j * alpha + beta).floor()
    return floor_quad_pair(
        j * alpha.a * beta.c + beta.a * alpha.c,
        j * alpha.b * beta.c,
        beta.b * alpha.c,
        0,
        alpha.d,
        beta.d,
        alpha.c * beta.c,
    )


class QuadPairValue:
    """Exact value (t + b*sqrt(d1) + c*sqrt(d2) + e*sqrt(d1*d2)) / den.

    Closed under addition, rational scaling and multiplication by a surd
    over either radicand; this is exactly what linear expressions in two
    incompatible surds (and their products with one of them) need.
    Canonical form: den > 0, gcd of all five integers is 1, d1 < d2.
    """

    __slots__ = ("t", "b", "c", "e", "d1", "d2", "den")

    def __init__(self, t, b, c, e, d1, d2, den):
        if d1 == d2:
            raise ValueError("radicands must differ; use QuadraticSurd instead")
        if d1 > d2:
            d1, d2, b, c = d2, d1, c, b
        if den < 0:
            t, b, c, e, den = -t, -b, -c, -e, -den
        g = gcd(gcd(gcd(abs(t), abs(b)), gcd(abs(c), abs(e))), den)
        if g > 1:
            t, b, c, e, den = t // g, b // g, c // g, e // g, den // g
        self.t, self.b, self.c, self.e = t, b, c, e
        self.d1, self.d2, self.den = d1, d2, den

    @classmethod
    def zero(cls, d1: int, d2: int) -> "QuadPairValue":
        return cls(0, 0, 0, 0, d1, d2, 1)

    @classmethod
    def from_surd(cls, x: QuadraticSurd, d1: int, d2: int) -> "QuadPairValue":
        if x.b == 0:
            return cls(x.a, 0, 0, 0, d1, d2, x.c)
        if x.d == d1:
            return cls(x.a, x.b, 0, 0, d1, d2, x.c)
        if x.d == d2:
            return cls(x.a, 0, x.b, 0, d1, d2, x.c)
        raise IncompatibleRadicandsError(
            f"sqrt({x.d}) does not embed in Q(sqrt({d1}), sqrt({d2}))"
        )

    def _lift(self, other) -> "QuadPairValue":
        if isinstance(other, QuadPairValue):
            if {other.d1, other.d2} != {self.d1, self.d2}:
                raise IncompatibleRadicandsError("radicand pairs differ")
            return other
        if isinstance(other, QuadraticSurd):
            return QuadPairValue.from_surd(other, self.d1, self.d2)
        if isinstance(other, int):
            return QuadPairValue(other, 0, 0, 0, self.d1, self.d2, 1)
        if isinstance(other, Fraction):
            return QuadPairValue(
                other.numerator, 0, 0, 0, self.d1, self.d2, other.denominator
            )
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        m, n = self.den, o.den
        return QuadPairValue(
            self.t * n + o.t * m,
            self.b * n + o.b * m,
            self.c * n + o.c * m,
            self.e * n + o.e * m,
            self.d1,
            self.d2,
            m * n,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadPairValue(
            -self.t, -self.b, -self.c, -self.e, self.d1, self.d2, self.den
        )

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def scale(self, fr) -> "QuadPairValue":
        fr = Fraction(fr)
        n, d = fr.numerator, fr.denominator
        return QuadPairValue(
            self.t * n, self.b * n, self.c * n, self.e * n,
            self.d1, self.d2, self.den * d,
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, QuadraticSurd):
            return self.mul_surd(other)
        return NotImplemented

    __rmul__ = __mul__

    def mul_surd(self, x: QuadraticSurd) -> "QuadPairValue":
        if x.b == 0:
            return self.scale(Fraction(x.a, x.c))
        t, b, c, e = self.t, self.b, self.c, self.e
        if x.d == self.d1:
            nt = x.a * t + x.b * b * self.d1
            nb = x.a * b + x.b * t
            nc = x.a * c + x.b * e * self.d1
            ne = x.a * e + x.b * c
        elif x.d == self.d2:
            nt = x.a * t + x.b * c * self.d2
            nb = x.a * b + x.b * e * self.d2
            nc = x.a * c + x.b * t
            ne = x.a * e + x.b * b
        else:
            raise IncompatibleRadicandsError(
                f"sqrt({x.d}) does not embed in Q(sqrt({self.d1}), sqrt({self.d2}))"
            )
        return QuadPairValue(nt, nb, nc, ne, self.d1, self.d2, self.den * x.c)

    def sign(self) -> int:
        return sign_quad_pair(self.t, self.b, self.c, self.e, self.d1, self.d2)

    def floor(self) -> int:
        return floor_quad_pair(
            self.t, self.b, self.c, self.e, self.d1, self.d2, self.den
        )

    def frac(self) -> "QuadPairValue":
        return self - self.floor()

    def to_surd(self) -> QuadraticSurd:
        """Collapse to a single-radicand surd when possible."""
        nonzero = [d for coef, d in ((self.b, self.d1), (self.c, self.d2)) if coef]
        if self.e or len(nonzero) == 2:
            raise IncompatibleRadicandsError("value spans both radicands")
        if not nonzero:
            return QuadraticSurd(self.t, 0, self.den, _RATIONAL_D)
        d = nonzero[0]
        coef = self.b if d == self.d1 else self.c
        return QuadraticSurd(self.t, coef, self.den, d)

    def to_float(self) -> float:
        g = 96
        lo = self.t << g
        for coef, d in ((self.b, self.d1), (self.c, self.d2), (self.e, self.d1 * self.d2)):
            if coef:
                l, _ = _term_bounds(coef, _scaled_sqrt(d, g))
                lo += l
        return float(Fraction(lo, self.den << g))

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return (self.t, self.b, self.c, self.e, self.d1, self.d2, self.den) == (
            o.t, o.b, o.c, o.e, o.d1, o.d2, o.den,
        )

    def __hash__(self):
        return hash((self.t, self.b, self.c, self.e, self.d1, self.d2, self.den))

    def __repr__(self):
        return (
            f"QuadPairValue(({self.t}{self.b:+d}*sqrt({self.d1})"
            f"{self.c:+d}*sqrt({self.d2}){self.e:+d}*sqrt({self.d1 * self.d2}))"
            f"/{self.den})"
        )


def exact_value(a, b=None):
    """Combine exact scalars, returning the narrowest type that fits."""
    if b is None:
        return a
    try:
        return a + b
    except IncompatibleRadicandsError:
        d1, d2 = a.d, b.d
        return QuadPairValue.from_surd(a, d1, d2) + QuadPairValue.from_surd(b, d1, d2)


# ---------------------------------------------------------------------------
# continued fractions
# ---------------------------------------------------------------------------


@dataclass
class ContinuedFraction:
    """Partial quotients and convergents of a quadratic irrational.

    ``preperiod``/``period`` mark the eventually periodic tail (Lagrange);
    they are None if the expansion was cut before a state repeated.
    """

    alpha: QuadraticSurd
    partial_quotients: list[int]
    convergents: list[tuple[int, int]] = field(repr=False)
    preperiod: int | None = None
    period: int | None = None

    @property
    def denominators(self) -> list[int]:
        return [q for _, q in self.convergents]

    def extended_quotients(self, k: int) -> list[int]:
        """First k partial quotients, cycling the periodic tail if needed."""
        pq = self.partial_quotients
        if k <= len(pq):
            return pq[:k]
        if self.period is None:
            raise ValueError("period not detected; re-expand with more terms")
        out = list(pq)
        cycle = pq[self.preperiod : self.preperiod + self.period]
        i = (len(pq) - self.preperiod) % self.period
        while len(out) < k:
            out.append(cycle[i])
            i = (i + 1) % self.period
        return out

    def denominators_up_to(self, bound: int) -> list[int]:
        """All convergent denominators q_n <= bound (requires a detected period
        if the stored expansion is too short)."""
        k = max(len(self.partial_quotients), 4)
        while True:
            quotients = (
                self.partial_quotients[:k]
                if k <= len(self.partial_quotients)
                else self.extended_quotients(k)
            )
            qs: list[int] = []
            q0, q1 = 0, None
            for a in quotients:
                if q1 is None:
                    q1 = 1
                else:
                    q0, q1 = q1, a * q1 + q0
                if q1 > bound:
                    return qs
                qs.append(q1)
            if self.period is None:
                raise ValueError("expansion too short and no period detected")
            k *= 2


def _floor_p_sqrtD_over_q(P: int, D: int, Q: int) -> int:
    s = isqrt(D)
    if Q > 0:
        return (P + s) // Q
    return (-P - s - 1) // (-Q)


def cf_expand(x: QuadraticSurd, k: int) -> ContinuedFraction:
    """First k partial quotients and convergents of an irrational surd.

    Runs the exact (P + sqrt(D)) / Q recursion; repeated (P, Q) states mark
    the eventual period.  Rational input is rejected.
    """
    if x.is_rational:
        raise ValueError("continued-fraction expansion requires an irrational value")
    D = x.b * x.b * x.d
    if x.b > 0:
        P, Q = x.a, x.c
    else:
        P, Q = -x.a, -x.c
    if (D - P * P) % Q != 0:
        aQ = abs(Q)
        P, D, Q = P * aQ, D * Q * Q, Q * aQ

    quotients: list[int] = []
    convergents: list[tuple[int, int]] = []
    p0, q0 = 1, 0
    p1, q1 = None, None
    seen: dict[tuple[int, int], int] = {}
    preperiod = period = None
    for i in range(k):
        state = (P, Q)
        if state in seen and period is None:
            preperiod = seen[state]
            period = i - preperiod
        elif period is None:
            seen[state] = i
        a = _floor_p_sqrtD_over_q(P, D, Q)
        quotients.append(a)
        if p1 is None:
            p1, q1 = a, 1
        else:
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
        convergents.append((p1, q1))
        P = a * Q - P
        Q = (D - P * P) // Q
    return ContinuedFraction(x, quotients, convergents, preperiod, period)


# ---------------------------------------------------------------------------
# fixed-point fallback backend
# ---------------------------------------------------------------------------


SCALE_BITS = 128
_SCALE = 1 << SCALE_BITS


class FixedPointReal:
    """128-bit fixed-point real with a certified absolute error bound.

    The true value lies in [(scaled - err) / 2**128, (scaled + err) / 2**128].
    Floors and comparisons raise :class:`PrecisionExhausted` instead of
    answering when the margin is smaller than the bound.
    """

    __slots__ = ("scaled", "err")

    def __init__(self, scaled: int, err: int = 0):
        self.scaled = scaled
        self.err = err

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "FixedPointReal":
        return cls(n << SCALE_BITS, 0)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "FixedPointReal":
        num, den = fr.numerator, fr.denominator
        scaled = (num << SCALE_BITS) // den
        return cls(scaled, 0 if (num << SCALE_BITS) % den == 0 else 1)

    @classmethod
    def from_surd(cls, x: QuadraticSurd) -> "FixedPointReal":
        return cls(x.scaled_floor(SCALE_BITS), 1)

    @classmethod
    def from_partial_quotients(cls, quotients: list[int]) -> "FixedPointReal":
        """Value of [a0; a1, a2, ...] through its convergents.

        Consumes quotients until the convergent denominator certifies an
        error below 2 ulp (|x - p/q| < 1/q^2 < 2**-130), or the list ends.
        """
        if not quotients:
            raise ValueError("empty partial-quotient list")
        p0, q0 = 1, 0
        p1, q1 = quotients[0], 1
        for a in quotients[1:]:
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
            if q1 * q1 > (_SCALE << 4):
                break
        err = _SCALE // (q1 * q1) + 2
        return cls((p1 << SCALE_BITS) // q1, err)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "FixedPointReal") -> "FixedPointReal":
        return FixedPointReal(self.scaled + other.scaled, self.err + other.err)

    def __sub__(self, other: "FixedPointReal") -> "FixedPointReal":
        return FixedPointReal(self.scaled - other.scaled, self.err + other.err)

    def __neg__(self) -> "FixedPointReal":
        return FixedPointReal(-self.scaled, self.err)

    def mul_int(self, n: int) -> "FixedPointReal":
        return FixedPointReal(self.scaled * n, self.err * abs(n))

    def mul(self, other: "FixedPointReal") -> "FixedPointReal":
        scaled = (self.scaled * other.scaled) >> SCALE_BITS
        err = (
            abs(self.scaled) * other.err
            + abs(other.scaled) * self.err
            + self.err * other.err
        ) >> SCALE_BITS
        return FixedPointReal(scaled, err + 2)

    # -- decisions ----------------------------------------------------------

    def floor(self) -> int:
        lo = (self.scaled - self.err) >> SCALE_BITS
        hi = (self.scaled + self.err) >> SCALE_BITS
        if lo != hi:
            raise PrecisionExhausted(
                f"floor undecidable: margin below error bound ({self.err} ulp)"
            )
        return lo

    def frac(self) -> "FixedPointReal":
        return FixedPointReal(self.scaled - (self.floor() << SCALE_BITS), self.err)

    def sign(self) -> int:
        if self.scaled - self.err > 0:
            return 1
        if self.scaled + self.err < 0:
            return -1
        if self.err == 0 and self.scaled == 0:
            return 0
        raise PrecisionExhausted("sign undecidable: value within error bound of 0")

    def to_float(self) -> float:
        return self.scaled / _SCALE

    def __repr__(self):
        return f"FixedPointReal({self.to_float():.18f} ± {self.err} ulp)"


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

#: Named rotation numbers.  The choice is conventional: any irrational with
#: bounded partial quotients works, these three have small, distinct period
#: patterns ([0;1,1,...], [0;2,2,...], [0;1,1,2,2,2,...]).
PRESETS: dict[str, QuadraticSurd] = {
    "golden": QuadraticSurd(-1, 1, 2, 5),   # (sqrt(5) - 1) / 2
    "sqrt2m1": QuadraticSurd(-1, 1, 1, 2),  # sqrt(2) - 1
    "silver": QuadraticSurd(2, -1, 1, 2),   # 2 - sqrt(2)
}


def preset(name: str) -> QuadraticSurd:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; available: {sorted(PRESETS)}"
        ) from None


def from_quadruple(spec: dict) -> QuadraticSurd:
    """Build a surd from a literal {"a":..,"b":..,"c":..,"d":..} mapping."""
    missing = {"a", "b", "c", "d"} - set(spec)
    if missing:
        raise ValueError(f"quadruple missing fields: {sorted(missing)}")
    return QuadraticSurd(int(spec["a"]), int(spec["b"]), int(spec["c"]), int(spec["d"]))
