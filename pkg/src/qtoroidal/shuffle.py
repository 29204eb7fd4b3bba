"""The color-symmetric shuffle algebra: symmetrized-evaluator elements, the
shuffle product, interval elements, and slope-vanishing tests.

Elements are black boxes: a degree vector and an exact evaluator on full
assignments {z_{c,a} -> value, 1 <= a <= d_c}.  Equality and algebraic
properties are tested by evaluation at random assignments; no canonical
rational-function form is ever computed.  Interval elements symmetrize the
relabeled kernel

    M(z_i..z_{j-1}) / prod (1 - z_a q^2 / z_{a+1}) * prod_{a<b} zeta(z_b/z_a)

where the label a = base + t*n (base the first label of its residue in the
interval) reads the honest variable z_{abar, t+1} times qbar^{-2t}.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .colored import (DEFAULT_CONVENTION, ColoredWeight, LaurentPolynomial,
                      evaluate_polynomial, homogeneous_degree, zeta)
from .partitions import add_vectors, interval_vector
from .scalars import ONE, ParameterSpecialization, PoleError, Scalar, ZERO

Assignment = dict[tuple[int, int], Scalar]


@dataclass
class ShuffleElement:
    spec: ParameterSpecialization
    degree: tuple[int, ...]
    vertical_degree: int | None
    evaluator: Callable[[Assignment], Scalar]
    # upper bounds for the numerator/denominator degrees of the restriction
    # to a line z -> t*z on any variable subset; drives slope interpolation
    t_degree_bound: int = 4
    label: str = "element"

    def variables(self) -> list[tuple[int, int]]:
        return [(c + 1, a + 1)
                for c, dc in enumerate(self.degree) for a in range(dc)]

    def evaluate(self, assignment: Assignment) -> Scalar:
        return self.evaluator(assignment)


def constant_element(spec: ParameterSpecialization, degree: Sequence[int],
                     value: Scalar = ONE) -> ShuffleElement:
    """The constant function ``value`` in the given variable multiplicity."""
    return ShuffleElement(spec, tuple(degree), 0, lambda _: value,
                          t_degree_bound=1, label=f"const{tuple(degree)}")


def element_A(spec: ParameterSpecialization, i: int, j: int,
              M: LaurentPolynomial,
              convention: str = DEFAULT_CONVENTION) -> ShuffleElement:
    """The interval element with kernel monomial M, as a symmetrized evaluator."""
    if not i < j:
        raise ValueError("need i < j")
    n = spec.n
    labels = list(range(i, j))
    deg = interval_vector(n, i, j)
    # label -> (honest color, occurrence index from the interval start)
    slot: dict[int, tuple[int, int]] = {}
    for a in labels:
        base = i + ((a - i) % n)
        occ = (a - base) // n
        slot[a] = ((a - 1) % n + 1, occ)
    q2 = spec.q ** 2
    qbar = spec.qbar

    def evaluator(assignment: Assignment) -> Scalar:
        perms_per_color = []
        colors = []
        for c in range(1, n + 1):
            dc = deg[c - 1]
            if dc:
                colors.append(c)
                perms_per_color.append(list(itertools.permutations(range(1, dc + 1))))
        total = ZERO
        for combo in itertools.product(*perms_per_color):
            arrangement = dict(zip(colors, combo))
            values: dict[int, Scalar] = {}
            for a in labels:
                c, occ = slot[a]
                idx = arrangement[c][occ]
                values[a] = assignment[(c, idx)] * qbar ** (-2 * occ)
            term = evaluate_polynomial(spec, M, values)
            for a in range(i, j - 1):
                den = 1 - values[a] * q2 / values[a + 1]
                if den == 0:
                    raise PoleError("kernel denominator vanished at assignment")
                term /= den
            for a in range(i, j):
                for b in range(a + 1, j):
                    term *= zeta(spec, ColoredWeight(b, values[b]),
                                 ColoredWeight(a, values[a]), convention)
            total += term
        return total

    L = j - i
    n_terms = 1
    for dc in deg:
        for m in range(2, dc + 1):
            n_terms *= m
    mdeg = max((sum(abs(e) for _, e in t.exponents) for t in M), default=0)
    bound = n_terms * (L * (L - 1) + (L - 1) + mdeg) + 2
    return ShuffleElement(spec, deg, homogeneous_degree(M), evaluator,
                          t_degree_bound=bound,
                          label=f"A[{i};{j})")


def shuffle_product(R: ShuffleElement, S: ShuffleElement,
                    convention: str = DEFAULT_CONVENTION) -> ShuffleElement:
    """R * S: sum over all ways to split each color's variables into the
    R block and the S block, with the zeta cross factor."""
    spec = R.spec
    n = spec.n
    deg = add_vectors(R.degree, S.degree)

    def evaluator(assignment: Assignment) -> Scalar:
        choices = []
        for c in range(1, n + 1):
            idx = list(range(1, deg[c - 1] + 1))
            choices.append(list(itertools.combinations(idx, R.degree[c - 1])))
        total = ZERO
        for combo in itertools.product(*choices):
            r_assign: Assignment = {}
            s_assign: Assignment = {}
            r_slots: list[tuple[int, Scalar]] = []
            s_slots: list[tuple[int, Scalar]] = []
            for c in range(1, n + 1):
                picked = combo[c - 1]
                rest = [a for a in range(1, deg[c - 1] + 1) if a not in picked]
                for pos, a in enumerate(picked, start=1):
                    v = assignment[(c, a)]
                    r_assign[(c, pos)] = v
                    r_slots.append((c, v))
                for pos, a in enumerate(rest, start=1):
                    v = assignment[(c, a)]
                    s_assign[(c, pos)] = v
                    s_slots.append((c, v))
            term = R.evaluate(r_assign) * S.evaluate(s_assign)
            if term != 0:
                for (c, v) in r_slots:
                    for (c2, v2) in s_slots:
                        term *= zeta(spec, ColoredWeight(c, v),
                                     ColoredWeight(c2, v2), convention)
            total += term
        return total

    vdeg = None
    if R.vertical_degree is not None and S.vertical_degree is not None:
        vdeg = R.vertical_degree + S.vertical_degree
    n_splits = 1
    for c in range(1, n + 1):
        n_splits *= math.comb(deg[c - 1], R.degree[c - 1])
    cross = sum(R.degree) * sum(S.degree)
    bound = n_splits * (R.t_degree_bound + S.t_degree_bound + cross) + 2
    return ShuffleElement(spec, deg, vdeg, evaluator, t_degree_bound=bound,
                          label=f"({R.label}*{S.label})")


# ---------------------------------------------------------------------------
# slope test by exact rational reconstruction
# ---------------------------------------------------------------------------

def _random_value(rng: random.Random) -> Scalar:
    return Fraction(rng.randint(2, 97), rng.randint(2, 97))


def random_assignment(elem: ShuffleElement, rng: random.Random) -> Assignment:
    return {v: _random_value(rng) for v in elem.variables()}


def _nullspace_vector(rows: list[list[Scalar]], ncols: int) -> list[Scalar] | None:
    """One nonzero rational solution of the homogeneous system, or None."""
    mat = [row[:] for row in rows]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                f = mat[k][c]
                mat[k] = [x - f * y for x, y in zip(mat[k], mat[r])]
        pivots.append((r, c))
        r += 1
        if r == len(mat):
            break
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    if not free:
        return None
    sol = [ZERO] * ncols
    sol[free[0]] = ONE
    for rr, cc in reversed(pivots):
        sol[cc] = -sum(mat[rr][c] * sol[c] for c in range(cc + 1, ncols))
    return sol


def slope_limit_test(elem: ShuffleElement, subset: Sequence[tuple[int, int]],
                     rng: random.Random, max_attempts: int = 8) -> bool:
    """Whether the evaluator tends to 0 when the subset variables are scaled
    by t -> 0, the rest held at a generic base assignment.

    The restriction is a univariate rational function of t with degrees
    bounded by the element's declared bound; it is reconstructed exactly from
    samples as a ratio P/Q and the limit read off after stripping common
    powers of t.
    """
    subset = list(subset)
    if not subset:
        raise ValueError("subset must be nonempty")
    D = elem.t_degree_bound
    for _ in range(max_attempts):
        base = random_assignment(elem, rng)

        def f(t: Scalar) -> Scalar:
            assign = dict(base)
            for v in subset:
                assign[v] = base[v] * t
            return elem.evaluate(assign)

        samples: list[tuple[Scalar, Scalar]] = []
        tried = set()
        bad = False
        while len(samples) < 2 * D + 1:
            t = _random_value(rng)
            if t in tried:
                continue
            tried.add(t)
            try:
                samples.append((t, f(t)))
            except PoleError:
                if len(tried) > 8 * D + 32:
                    bad = True
                    break
        if bad:
            continue
        # unknowns: p_0..p_D, q_0..q_D with P(t) - f*Q(t) = 0 at each sample
        rows = []
        for t, ft in samples:
            row = [t ** m for m in range(D + 1)]
            row += [-ft * t ** m for m in range(D + 1)]
            rows.append(row)
        sol = _nullspace_vector(rows, 2 * (D + 1))
        if sol is None:
            continue
        P = sol[:D + 1]
        Q = sol[D + 1:]
        if all(x == 0 for x in Q):
            continue
        if all(x == 0 for x in P):
            return True  # restriction is identically zero
        # a common zero at t=0 is a common factor of t: strip it
        while P[0] == 0 and Q[0] == 0:
            P, Q = P[1:], Q[1:]
        if Q[0] == 0:
            return False  # limit is infinite, certainly not 0
        return P[0] == 0
    raise PoleError("slope test could not find a usable sample set")
