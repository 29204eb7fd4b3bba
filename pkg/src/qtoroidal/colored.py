"""Colors, the zeta function, the tau factors, and sheet conventions.

Variables carry an integer color.  The color range {1..n} repeats across
"sheets": rebinding a weight of natural color c to a label l with l = c mod n
multiplies it by qbar_n^{2(c - l)}, matching the tautological-bundle twist
V_{i+n} = V_i * qbar^{-2}.

Two readings of the zeta function are implemented:

* "split" (default): each of the two Kronecker deltas carries its own floor,

      zeta(z/w) = ((z q qb^{2 floor((i-j)/n)} - w/q) /
                   (z   qb^{2 floor((i-j)/n)} - w)) ^ delta(ibar, jbar)
                * ((z   qb^{2 floor((i+1-j)/n)} - w) /
                   (z q qb^{2 floor((i+1-j)/n)} - w/q)) ^ delta(ibar+1, jbar)

  This is the reading consistent with the wedge-product form of the diagonal
  operators and the one under which the whole relation suite closes; it also
  degenerates to the usual rank-1 toroidal kernel at n = 1.

* "literal": a single shared floor floor((i-j)/n) raised to the difference of
  the deltas.  Kept for the n = 1 experiment; for n = 1 the exponent is
  identically 0, so zeta == 1.
"""

from __future__ import annotations

from typing import NamedTuple

from .scalars import (LinearFactor, ONE, ParameterSpecialization, Scalar,
                      evaluate_factor_product)

SPLIT = "split"
LITERAL = "literal"
DEFAULT_CONVENTION = SPLIT


class ColoredWeight(NamedTuple):
    color: int
    value: Scalar


def sheet_twist(spec: ParameterSpecialization, box_color: int, label: int) -> Scalar:
    """qbar_n^{2(box_color - label)}: converts a raw weight of natural color
    box_color to the weight seen at ``label``.  Requires label = color mod n."""
    if (box_color - label) % spec.n != 0:
        raise ValueError(f"label {label} not congruent to color {box_color} mod {spec.n}")
    return spec.qbar_n ** (2 * (box_color - label))


def shift_sheet(spec: ParameterSpecialization, w: ColoredWeight, s: int) -> ColoredWeight:
    """Rebind a weight s sheets up: color += s*n, value *= qbar^{-2s}."""
    return ColoredWeight(w.color + s * spec.n, w.value * spec.qbar ** (-2 * s))


def zeta_factors(spec: ParameterSpecialization, z_value: Scalar, z_color: int,
                 w_color: int, convention: str = DEFAULT_CONVENTION) -> list[LinearFactor]:
    """zeta(z/w) as linear factors (alpha, beta, exp) in the w-slot variable,
    for a fixed z-slot value.  Exponent zero yields the empty list."""
    n, q, qb = spec.n, spec.q, spec.qbar_n
    d1 = (z_color - w_color) % n == 0
    d2 = (z_color + 1 - w_color) % n == 0
    out: list[LinearFactor] = []
    if convention == LITERAL:
        e = int(d1) - int(d2)
        if e == 0:
            return out
        fl = (z_color - w_color) // n
        tw = qb ** (2 * n * fl)
        out.append((z_value * q * tw, 1 / q, e))
        out.append((z_value * tw, ONE, -e))
        return out
    if convention != SPLIT:
        raise ValueError(f"unknown zeta convention {convention!r}")
    if d1:
        tw = qb ** (2 * n * ((z_color - w_color) // n))
        out.append((z_value * q * tw, 1 / q, 1))
        out.append((z_value * tw, ONE, -1))
    if d2:
        tw = qb ** (2 * n * ((z_color + 1 - w_color) // n))
        out.append((z_value * tw, ONE, 1))
        out.append((z_value * q * tw, 1 / q, -1))
    return out


def zeta(spec: ParameterSpecialization, z: ColoredWeight, w: ColoredWeight,
         convention: str = DEFAULT_CONVENTION) -> Scalar:
    """zeta(z/w) evaluated exactly; PoleError on a vanishing denominator."""
    return evaluate_factor_product(
        zeta_factors(spec, z.value, z.color, w.color, convention), w.value)


def zeta_numerator_denominator(spec: ParameterSpecialization, z: ColoredWeight,
                               w: ColoredWeight,
                               convention: str = DEFAULT_CONVENTION) -> tuple[Scalar, Scalar]:
    """(N, D) with zeta(z/w) = N/D: positive-exponent factors multiply N,
    negative-exponent factors multiply D.  Used by the denominator-cleared
    relation checks, where either side may legitimately vanish."""
    num = ONE
    den = ONE
    for alpha, beta, e in zeta_factors(spec, z.value, z.color, w.color, convention):
        v = alpha - beta * w.value
        if e > 0:
            num *= v ** e
        else:
            den *= v ** (-e)
    return num, den


def tau_plus(spec: ParameterSpecialization, z: ColoredWeight) -> Scalar:
    """prod over extended a with hat(a) = color+1 of (u_a/q - q z/u_a)."""
    q = spec.q
    val = ONE
    for a in spec.frame_indices(z.color + 1):
        ua = spec.u_ext(a)
        val *= ua / q - q * z.value / ua
    return val


def tau_minus(spec: ParameterSpecialization, z: ColoredWeight) -> Scalar:
    """prod over extended a with hat(a) = color of (u_a - z/u_a)."""
    val = ONE
    for a in spec.frame_indices(z.color):
        ua = spec.u_ext(a)
        val *= ua - z.value / ua
    return val


def tau_minus_factors(spec: ParameterSpecialization, color: int) -> list[LinearFactor]:
    """tau_-(z of ``color``) as linear factors in the spectral variable z."""
    return [(spec.u_ext(a), 1 / spec.u_ext(a), 1)
            for a in spec.frame_indices(color)]


def tau_plus_factors(spec: ParameterSpecialization, color: int) -> list[LinearFactor]:
    """tau_+(z of ``color``) as linear factors in the spectral variable z."""
    q = spec.q
    return [(spec.u_ext(a) / q, q / spec.u_ext(a), 1)
            for a in spec.frame_indices(color + 1)]


# ---------------------------------------------------------------------------
# Laurent monomials in the interval variables z_i .. z_{j-1}
# ---------------------------------------------------------------------------

class LaurentMonomial(NamedTuple):
    """coeff * qbar_n^{qbar_power} * prod z_label^{exp} over ``exponents``."""
    coeff: Scalar
    qbar_power: int
    exponents: tuple[tuple[int, int], ...]  # sorted (label, exponent) pairs


LaurentPolynomial = tuple[LaurentMonomial, ...]


def monomial(coeff: Scalar = ONE, qbar_power: int = 0,
             exponents: dict[int, int] | None = None) -> LaurentMonomial:
    items = tuple(sorted((exponents or {}).items()))
    return LaurentMonomial(Scalar(coeff), qbar_power, items)


def monomial_zk(i: int, k: int) -> LaurentPolynomial:
    """M = z_i^k."""
    return (monomial(exponents={i: k} if k else {}),)


def slope_monomial(n: int, i: int, j: int, k: int) -> LaurentPolynomial:
    """M = prod_{a=i}^{j-1} (z_a qbar_n^{2a})^{ceil((a-i+1)k/(j-i)) - ceil((a-i)k/(j-i))}.

    The exponents telescope to k, so the homogeneous degree is k.
    """
    if not i < j:
        raise ValueError("need i < j")
    L = j - i
    ceildiv = lambda p, d: -((-p) // d)
    exps = {}
    qpow = 0
    for a in range(i, j):
        e = ceildiv((a - i + 1) * k, L) - ceildiv((a - i) * k, L)
        if e:
            exps[a] = e
        qpow += 2 * a * e
    return (monomial(qbar_power=qpow, exponents=exps),)


def evaluate_polynomial(spec: ParameterSpecialization, M: LaurentPolynomial,
                        values: dict[int, Scalar]) -> Scalar:
    total = Scalar(0)
    for term in M:
        v = term.coeff * spec.qbar_n ** term.qbar_power
        for label, e in term.exponents:
            v *= values[label] ** e
        total += v
    return total


def homogeneous_degree(M: LaurentPolynomial) -> int | None:
    """Total z-degree if every term agrees, else None."""
    degs = {sum(e for _, e in term.exponents) for term in M}
    return degs.pop() if len(degs) == 1 else None
