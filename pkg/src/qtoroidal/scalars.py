"""Exact rational arithmetic, generic parameter specializations, and truncated
series expansion at 0 and infinity.

Every quantity in this package is a ``fractions.Fraction`` (alias ``Scalar``):
no floating point anywhere.  Identities are verified by exact evaluation at
random rational parameter values, generic enough that no denominator of any
tested expression vanishes (Schwartz-Zippel style, repeated over independent
seeds by the verification suite).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# A linear factor (alpha, beta, exponent) stands for (alpha - beta*z)**exponent
# in a single spectral variable z.
LinearFactor = tuple[Fraction, Fraction, int]

INFINITY = "inf"
AT_ZERO = "zero"

MAX_RETRIES = 64
_HEIGHT = 64


class PoleError(ArithmeticError):
    """A denominator vanished where the formulas require it nonzero.

    At a generic specialization this never happens; seeing it means the
    specialization failed its genericity contract and the caller should retry
    with a fresh seed.
    """


class AdjacentPoleError(PoleError):
    """A tableau-sum denominator (1 - q^2 chi_a / chi_{a+1}) vanished.

    Carries the offending context so the event can be reported; this is an
    exit-code-3 condition for the CLI.
    """

    def __init__(self, message: str, context: dict | None = None):
        super().__init__(message)
        self.context = context or {}


class GenericityError(RuntimeError):
    """random_specialization exhausted its retry budget.

    The predicate is expected to accept almost every draw; repeated rejection
    signals a bug in the predicate or the drawing ranges, not bad luck.
    """


def frac_str(x: Fraction) -> str:
    """Canonical "num/den" form with positive denominator, e.g. "-3/7", "5/1"."""
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


@dataclass(frozen=True)
class ParameterSpecialization:
    """Exact rational values for q, qbar^(1/n) and the framing parameters u_a.

    ``qbar_n`` is the value of qbar^(1/n); qbar itself is qbar_n**n.  The u's
    extend to all integer indices by u_{a+r} = u_a * qbar^{-1}, and the box
    weight of (x, y) in the a-th diagram is u_a^2 q^{2x} (the squared torus
    normalization: the frame class of color i is sum of u_a^2).
    """

    n: int
    r_vec: tuple[int, ...]
    q: Fraction
    qbar_n: Fraction
    u: tuple[Fraction, ...]
    seed: int = 0
    retries: int = 0

    def __post_init__(self):
        if self.n < 1 or any(r < 1 for r in self.r_vec) or len(self.r_vec) != self.n:
            raise ValueError("need n >= 1 and n positive framing multiplicities")
        if self.q == 0 or self.qbar_n == 0 or any(x == 0 for x in self.u):
            raise ValueError("parameters must be nonzero")
        if len(self.u) != sum(self.r_vec):
            raise ValueError("need r_1 + ... + r_n framing parameters")

    @property
    def r(self) -> int:
        return sum(self.r_vec)

    @property
    def qbar(self) -> Fraction:
        return self.qbar_n ** self.n

    def rbar(self, i: int) -> int:
        """r_i extended n-periodically to all integers."""
        return self.r_vec[(i - 1) % self.n]

    def hat(self, a: int) -> int:
        """The color i with r_1+...+r_{i-1} < a <= r_1+...+r_i, extended by
        hat(a + r k) = hat(a) + n k."""
        t, a0 = divmod(a - 1, self.r)
        s = 0
        for i, ri in enumerate(self.r_vec, start=1):
            s += ri
            if a0 + 1 <= s:
                return i + self.n * t
        raise AssertionError

    def u_ext(self, a: int) -> Fraction:
        """u_a for any integer a, via u_{a+r} = u_a * qbar^{-1}."""
        t, a0 = divmod(a - 1, self.r)
        return self.u[a0] * self.qbar ** (-t)

    def frame_indices(self, color: int) -> list[int]:
        """Extended indices a with hat(a) equal to ``color`` exactly."""
        cbar = (color - 1) % self.n + 1
        t = (color - cbar) // self.n
        return [a + self.r * t for a in range(1, self.r + 1)
                if self.hat(a) == cbar]

    def sigma(self, i: int) -> int:
        """r_1 + ... + r_i for i > 0, minus r_{i+1} + ... + r_0 for i <= 0."""
        if i > 0:
            return sum(self.rbar(j) for j in range(1, i + 1))
        return -sum(self.rbar(j) for j in range(i + 1, 1))


def _draw_fraction(rng: random.Random) -> Fraction:
    # positive, away from 1, height bounded so products of thousands of
    # factors stay small
    while True:
        num = rng.randint(2, _HEIGHT)
        den = rng.randint(2, _HEIGHT)
        if num != den:
            return Fraction(num, den)


def genericity_ranges(n: int, window: int) -> tuple[int, int]:
    """(X_max, M_max): box x-exponent and qbar_n^(2m) twist ranges that the
    degree window can produce, with slack for the extended-label operators."""
    x_max = window + n + 1
    m_max = n * (2 * window + 2 * n + 4)
    return x_max, m_max


def is_generic(spec: ParameterSpecialization, window: int) -> bool:
    """No collisions and no q^{+-2} ratios among the box characters
    u_a^2 q^{2x} qbar_n^{2m} over the window ranges, except the ratio forced
    along each (a, m) line by consecutive x."""
    q = spec.q
    if q == 1 or q == -1:
        return False
    x_max, m_max = genericity_ranges(spec.n, window)
    seen: dict[Fraction, tuple[int, int, int]] = {}
    for a in range(1, spec.r + 1):
        ua2 = spec.u[a - 1] ** 2
        for x in range(x_max + 1):
            base = ua2 * q ** (2 * x)
            for m in range(-m_max, m_max + 1):
                v = base * spec.qbar_n ** (2 * m)
                if v in seen:
                    return False
                seen[v] = (a, x, m)
    q2 = q ** 2
    for v, (a, x, m) in seen.items():
        other = seen.get(v * q2)
        if other is not None:
            a2, x2, m2 = other
            if not (a2 == a and m2 == m and x2 == x + 1):
                return False
    return True


def random_specialization(seed: int, n: int, r_vec: Sequence[int],
                          window: int) -> ParameterSpecialization:
    """Deterministic generic specialization for the given seed.

    Draws q, qbar_n, u_1..u_r as positive rationals of bounded height and
    retries (recording the count) until the genericity predicate accepts.
    """
    r_vec = tuple(r_vec)
    for attempt in range(MAX_RETRIES):
        mix = seed
        for v in (n, *r_vec, window, attempt):
            mix = mix * 1000003 + v + 1
        rng = random.Random(mix)
        q = _draw_fraction(rng)
        qbar_n = _draw_fraction(rng)
        u = tuple(_draw_fraction(rng) for _ in range(sum(r_vec)))
        spec = ParameterSpecialization(n=n, r_vec=r_vec, q=q, qbar_n=qbar_n,
                                       u=u, seed=seed, retries=attempt)
        if is_generic(spec, window):
            return spec
    raise GenericityError(
        f"no generic specialization after {MAX_RETRIES} draws (seed={seed})")


# ---------------------------------------------------------------------------
# linear-factor products
# ---------------------------------------------------------------------------

def evaluate_factor_product(factors: Iterable[LinearFactor],
                            point: Fraction) -> Fraction:
    """lim_{z -> point} of prod (alpha - beta z)**exp, with exact cancellation.

    Each vanishing linear factor is exactly -beta*(z - point), so the limit
    exists iff the net vanishing order is zero, in which case the vanishing
    factors contribute (-beta)**exp.  Net positive order gives 0; net negative
    order raises PoleError.
    """
    order = 0
    val = ONE
    for alpha, beta, e in factors:
        v = alpha - beta * point
        if v == 0:
            order += e
            val *= (-beta) ** e
        else:
            val *= v ** e
    if order > 0:
        return ZERO
    if order < 0:
        raise PoleError(f"net pole of order {-order} at {point}")
    return val


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """Exact truncated expansion at z=0 or z=infinity.

    At INFINITY the data represents sum_k coeffs[k] * z^{-(offset+k)}; at
    AT_ZERO it represents sum_k coeffs[k] * z^{offset+k}.  Products and
    inverses keep the declared truncation order (len(coeffs) - 1).
    """

    point: str
    offset: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.point not in (INFINITY, AT_ZERO):
            raise ValueError("point must be 'inf' or 'zero'")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def normalized(self) -> "TruncatedSeries":
        """Strip exactly-zero leading coefficients (shrinks the order)."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        if k == 0:
            return self
        if k == len(self.coeffs):
            return TruncatedSeries(self.point, self.offset + k, (ZERO,))
        return TruncatedSeries(self.point, self.offset + k, self.coeffs[k:])

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.point == other.point
        order = min(self.order, other.order)
        out = [ZERO] * (order + 1)
        for i, a in enumerate(self.coeffs[:order + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[:order + 1 - i]):
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(self.point, self.offset + other.offset, tuple(out))

    def inverse(self) -> "TruncatedSeries":
        s = self.normalized()
        if s.coeffs[0] == 0:
            raise PoleError("cannot invert a series that is zero to this order")
        order = s.order
        inv = [ZERO] * (order + 1)
        inv[0] = 1 / s.coeffs[0]
        for m in range(1, order + 1):
            acc = ZERO
            for j in range(1, m + 1):
                if j < len(s.coeffs):
                    acc += s.coeffs[j] * inv[m - j]
            inv[m] = -acc / s.coeffs[0]
        return TruncatedSeries(s.point, -s.offset, tuple(inv))

    def scale(self, c: Fraction) -> "TruncatedSeries":
        return TruncatedSeries(self.point, self.offset,
                               tuple(c * x for x in self.coeffs))

    def shift(self, zpower: int) -> "TruncatedSeries":
        """Multiply by z**zpower."""
        d = -zpower if self.point == INFINITY else zpower
        return TruncatedSeries(self.point, self.offset + d, self.coeffs)

    def coeff(self, exponent: int) -> Fraction:
        """Coefficient of z^{-exponent} at INFINITY, of z^{+exponent} at 0.

        Raises if the exponent lies above the truncation order (a bug: orders
        are always derived from the requested mode range).
        """
        idx = exponent - self.offset
        if idx < 0:
            return ZERO
        if idx >= len(self.coeffs):
            raise PoleError(
                f"series truncated below requested exponent {exponent}")
        return self.coeffs[idx]


def expand_linear_product(factors: Sequence[LinearFactor], point: str,
                          order: int, constant: Fraction = ONE,
                          zpower: int = 0) -> TruncatedSeries:
    """Truncated expansion of constant * z**zpower * prod (alpha - beta z)**e.

    At INFINITY a factor (alpha - beta z) with beta != 0 has leading term
    -beta*z; at 0 the leading term is alpha.  Inversion requires the leading
    coefficient nonzero in the appropriate sense, which genericity guarantees
    for all factor lists this package produces.
    """
    series = TruncatedSeries(point, 0, (constant,) + (ZERO,) * order)
    series = series.shift(zpower)
    for alpha, beta, e in factors:
        if alpha == 0 and beta == 0:
            raise PoleError("zero factor in linear product")
        if alpha == 0 or beta == 0:
            # exact monomial alpha or -beta*z: scale, no truncation loss
            if alpha != 0:
                series = series.scale(alpha ** e)
            else:
                series = series.scale((-beta) ** e).shift(e)
            continue
        if point == INFINITY:
            base = TruncatedSeries(point, -1, (-beta, alpha) + (ZERO,) * (order - 1))
        else:
            base = TruncatedSeries(point, 0, (alpha, -beta) + (ZERO,) * (order - 1))
        if e > 0:
            for _ in range(e):
                series = series.mul(base)
        else:
            inv = base.inverse()
            for _ in range(-e):
                series = series.mul(inv)
    return series
