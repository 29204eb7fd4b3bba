"""Sparse graded matrices of the algebra generators on the fixed-point basis.

Matrix elements follow the localization formulas.  Conventions that the
relation suite pins down (see the verification module):

* a box of natural color c bound to an integer label l (l = c mod n) enters
  monomials and tau factors through its twisted weight
  raw * qbar_n^{2(c - l)}, while zeta factors between concrete boxes are
  evaluated on raw weights at natural colors (the floors supply the twists);

* the one-box coefficients are

      <lam| e_i^(k) |mu>  = (1/q - q) chi^k tau_+(chi) prod_{b in mu} zeta(chi_box / b)
      <mu| f_i^(k) |lam>  = (1 - q^-2) chi^k / lim_{z->chi} [tau_-(z) prod_{b in lam} zeta(b / z)]

  where the f denominator is the exact limit of the full product: the
  spectral-variable pole of the removed box's own zeta factor cancels against
  a matching zero (tau for a first-column-first-row box, otherwise the left
  or lower neighbor), so the value is finite at a generic specialization;

* multi-box operators sum over tableau chains with the kernel
  M(chi) * prod_{a<b} zeta(chi_b/chi_a) / prod_a (1 - q^2 chi_a/chi_{a+1}).

Diagonal operators expose both the rational eigenvalue of the generating
series and its mode coefficients; the mode convention strips the global
(-1)^{r_i} sign from the plus series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .colored import (DEFAULT_CONVENTION, ColoredWeight, LaurentPolynomial,
                      evaluate_polynomial, homogeneous_degree, monomial_zk,
                      sheet_twist, slope_monomial, tau_minus_factors,
                      tau_plus, zeta, zeta_factors)
from .partitions import (Box, RPartition, add_vectors, addable_boxes,
                         box_color, box_weight, degree,
                         enumerate_fixed_points, interval_vector,
                         remove_box, removable_boxes, unit_vector)
from .scalars import (AT_ZERO, AdjacentPoleError, INFINITY, ONE,
                      ParameterSpecialization, PoleError, Scalar,
                      TruncatedSeries, ZERO, evaluate_factor_product,
                      expand_linear_product)

Block = dict[tuple[RPartition, RPartition], Scalar]


def all_degree_vectors(n: int, max_total: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    def rec(i: int, rem: int, cur: tuple[int, ...]):
        if i == n:
            out.append(cur)
            return
        for v in range(rem + 1):
            rec(i + 1, rem - v, cur + (v,))
    rec(0, max_total, ())
    out.sort(key=lambda d: (sum(d), d))
    return out


class GradedOperator:
    """A degree-shifting operator, stored as lazily built sparse blocks.

    ``block(d)`` maps the source degree d to a dict
    {(target_fixed_point, source_fixed_point): value} supported on degree
    d + hshift.  Blocks are exact and cached; composition and linear algebra
    operate blockwise.
    """

    def __init__(self, hshift: tuple[int, ...],
                 block_fn: Callable[[tuple[int, ...]], Block],
                 vshift: int | None = None):
        self.hshift = hshift
        self.vshift = vshift
        self._block_fn = block_fn
        self._cache: dict[tuple[int, ...], Block] = {}

    def block(self, d: tuple[int, ...]) -> Block:
        d = tuple(d)
        if d not in self._cache:
            if any(x < 0 for x in d) or any(x < 0 for x in add_vectors(d, self.hshift)):
                self._cache[d] = {}
            else:
                self._cache[d] = self._block_fn(d)
        return self._cache[d]

    def compose(self, other: "GradedOperator") -> "GradedOperator":
        """self after other (matrix product self @ other)."""
        def fn(d: tuple[int, ...]) -> Block:
            inner = other.block(d)
            if not inner:
                return {}
            outer = self.block(add_vectors(d, other.hshift))
            if not outer:
                return {}
            by_col: dict[RPartition, list[tuple[RPartition, Scalar]]] = {}
            for (t, m), v in outer.items():
                by_col.setdefault(m, []).append((t, v))
            out: Block = {}
            for (m, s), bv in inner.items():
                for t, av in by_col.get(m, ()):
                    key = (t, s)
                    out[key] = out.get(key, ZERO) + av * bv
            return {k: v for k, v in out.items() if v != 0}
        vs = None
        if self.vshift is not None and other.vshift is not None:
            vs = self.vshift + other.vshift
        return GradedOperator(add_vectors(self.hshift, other.hshift), fn, vs)

    def add(self, other: "GradedOperator") -> "GradedOperator":
        if tuple(self.hshift) != tuple(other.hshift):
            raise ValueError("cannot add operators with different shifts")
        def fn(d):
            out = dict(self.block(d))
            for k, v in other.block(d).items():
                out[k] = out.get(k, ZERO) + v
            return {k: v for k, v in out.items() if v != 0}
        vs = self.vshift if self.vshift == other.vshift else None
        return GradedOperator(self.hshift, fn, vs)

    def scale(self, c: Scalar) -> "GradedOperator":
        if c == 0:
            return GradedOperator(self.hshift, lambda d: {}, self.vshift)
        return GradedOperator(self.hshift,
                              lambda d: {k: c * v for k, v in self.block(d).items()},
                              self.vshift)

    def is_zero_on(self, degrees: Iterable[tuple[int, ...]]) -> bool:
        return all(not self.block(d) for d in degrees)

    def equal_on(self, other: "GradedOperator",
                 degrees: Iterable[tuple[int, ...]]) -> bool:
        return all(self.block(d) == other.block(d) for d in degrees)


def zero_operator(n: int, hshift: tuple[int, ...] | None = None) -> GradedOperator:
    return GradedOperator(hshift or (0,) * n, lambda d: {}, 0)


def identity_operator(rep: "Representation") -> GradedOperator:
    def fn(d):
        return {(fp, fp): ONE for fp in rep.fixed_points(d)}
    return GradedOperator((0,) * rep.spec.n, fn, 0)


class GradedVector:
    """A vector in the windowed module: exact coefficients on fixed points,
    grouped by degree, with components beyond the window discarded (the
    ``dropped`` counter records how many)."""

    def __init__(self, spec: ParameterSpecialization, window: int,
                 entries: dict[RPartition, Scalar], dropped: int = 0):
        self.spec = spec
        self.window = window
        self.entries = {}
        self.dropped = dropped
        for fp, val in entries.items():
            if val == 0:
                continue
            if fp.size > window:
                self.dropped += 1
            else:
                self.entries[fp] = val

    def group_by_degree(self) -> dict[tuple[int, ...], dict[RPartition, Scalar]]:
        out: dict[tuple[int, ...], dict[RPartition, Scalar]] = {}
        for fp, val in self.entries.items():
            out.setdefault(degree(self.spec, fp), {})[fp] = val
        return out

    def apply(self, op: GradedOperator) -> "GradedVector":
        acc: dict[RPartition, Scalar] = {}
        for d, comp in self.group_by_degree().items():
            blk = op.block(d)
            for (t, s), v in blk.items():
                if s in comp:
                    acc[t] = acc.get(t, ZERO) + v * comp[s]
        return GradedVector(self.spec, self.window, acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedVector) and \
            self.entries == other.entries and self.window == other.window


def vacuum_vector(rep: "Representation", window: int) -> GradedVector:
    vac = rep.fixed_points((0,) * rep.spec.n)[0]
    return GradedVector(rep.spec, window, {vac: ONE})


@dataclass(frozen=True)
class PreparedChain:
    """One tableau chain with everything mode-independent precomputed."""
    target: RPartition
    source: RPartition
    prefactor: Scalar           # per-box tau/zeta products, incl. (1/q - q) etc.
    kernel: Scalar              # zeta kernel over label pairs / denominators
    chi: tuple[tuple[int, Scalar], ...]  # label -> twisted weight


class Representation:
    """The action on the windowed fixed-point module for one specialization.

    All operator blocks, chain preparations and eigenvalue expansions are
    cached per instance, keyed by the construction parameters only; entries of
    identical keys are identical values, so concurrent reuse is safe.
    """

    def __init__(self, spec: ParameterSpecialization,
                 convention: str = DEFAULT_CONVENTION):
        self.spec = spec
        self.convention = convention
        self._prepared_e: dict = {}
        self._prepared_f: dict = {}
        self._psi_parts: dict = {}
        self._psi_series: dict = {}
        self._ops: dict = {}

    # -- basis ------------------------------------------------------------

    def fixed_points(self, d: Sequence[int]) -> tuple[RPartition, ...]:
        return enumerate_fixed_points(self.spec, tuple(d))

    def degrees(self, window: int) -> list[tuple[int, ...]]:
        return all_degree_vectors(self.spec.n, window)

    # -- single-box coefficients -------------------------------------------

    def bound_weight(self, box: Box, label: int) -> Scalar:
        c = box_color(self.spec, box)
        return box_weight(self.spec, box) * sheet_twist(self.spec, c, label)

    def e_entry(self, lam: RPartition, mu: RPartition, box: Box,
                label: int, k: int = 0) -> Scalar:
        """<lam| e |mu> for lam = mu + box, the box bound to ``label``."""
        spec = self.spec
        q = spec.q
        chi = self.bound_weight(box, label)
        val = (1 / q - q) * chi ** k * tau_plus(spec, ColoredWeight(label, chi))
        c = box_color(spec, box)
        w = box_weight(spec, box)
        for b in mu.boxes():
            val *= zeta(spec, ColoredWeight(c, w),
                        ColoredWeight(box_color(spec, b), box_weight(spec, b)),
                        self.convention)
        return val

    def f_entry(self, lam: RPartition, mu: RPartition, box: Box,
                label: int, k: int = 0) -> Scalar:
        """<mu| f |lam> for lam = mu + box (f removes the box)."""
        spec = self.spec
        chi = self.bound_weight(box, label)
        den = evaluate_factor_product(self._f_denominator_factors(lam, label), chi)
        if den == 0:
            raise PoleError("f denominator vanished; specialization not generic")
        return (1 - spec.q ** -2) * chi ** k / den

    def _f_denominator_factors(self, lam: RPartition, label: int):
        spec = self.spec
        facs = list(tau_minus_factors(spec, label))
        for b in lam.boxes():
            facs.extend(zeta_factors(spec, box_weight(spec, b),
                                     box_color(spec, b), label, self.convention))
        return facs

    # -- simple operators ---------------------------------------------------

    def e_simple(self, i: int, k: int) -> GradedOperator:
        key = ("e_simple", i, k)
        if key not in self._ops:
            def fn(d):
                out: Block = {}
                for mu in self.fixed_points(d):
                    for box in addable_boxes(self.spec, mu, i):
                        lam = _added(mu, box)
                        out[(lam, mu)] = self.e_entry(lam, mu, box, i, k)
                return {kk: v for kk, v in out.items() if v != 0}
            self._ops[key] = GradedOperator(unit_vector(self.spec.n, i), fn, k)
        return self._ops[key]

    def f_simple(self, i: int, k: int) -> GradedOperator:
        key = ("f_simple", i, k)
        if key not in self._ops:
            def fn(d):
                out: Block = {}
                for lam in self.fixed_points(d):
                    for box in removable_boxes(self.spec, lam, i):
                        mu = remove_box(lam, box)
                        out[(mu, lam)] = self.f_entry(lam, mu, box, i, k)
                return {kk: v for kk, v in out.items() if v != 0}
            hs = tuple(-x for x in unit_vector(self.spec.n, i))
            vs = self.spec.rbar(i + 1) - self.spec.rbar(i) + k
            self._ops[key] = GradedOperator(hs, fn, vs)
        return self._ops[key]

    # -- diagonal operators ---------------------------------------------------

    def psi_eigen_parts(self, lam: RPartition, i: int, sign: int):
        """(constant, zpower, factors) of the rational eigenvalue of the
        psi^{sign}_i(z) series on |lam>, for i in {1..n}.

        Plus:  q^{sigma_i} z^{-r_i} prod_a (u_a - z/u_a) * Z(z)
        Minus: q^{-sigma_i}         prod_a (u_a - z/u_a) * Z(z)
        with Z(z) the zeta product over the boxes of lam.
        """
        key = (lam, i, sign)
        if key not in self._psi_parts:
            spec = self.spec
            if not 1 <= i <= spec.n:
                raise ValueError("direct eigenvalue only for colors 1..n")
            frame = spec.frame_indices(i)
            facs = [(spec.u_ext(a), 1 / spec.u_ext(a), 1) for a in frame]
            for b in lam.boxes():
                facs.extend(zeta_factors(spec, box_weight(spec, b),
                                         box_color(spec, b), i, self.convention))
            if sign > 0:
                const, zpow = spec.q ** spec.sigma(i), -len(frame)
            else:
                const, zpow = spec.q ** (-spec.sigma(i)), 0
            self._psi_parts[key] = (const, zpow, tuple(facs))
        return self._psi_parts[key]

    def psi_eigen_parts_any(self, lam: RPartition, i: int, sign: int):
        """Eigenvalue parts for any integer color, reduced to {1..n} at the
        level of the generating series: substituting z -> z qbar^2 rescales
        every linear factor and the z-power."""
        spec = self.spec
        steps = 0
        ii = i
        while ii < 1:
            ii += spec.n
            steps -= 1
        while ii > spec.n:
            ii -= spec.n
            steps += 1
        const, zpow, facs = self.psi_eigen_parts(lam, ii, sign)
        if steps == 0:
            return const, zpow, facs
        # psi_i(z) = psi_{i-n}(z qbar^2) * (q^{sigma_n} qbar^{r_i})^{sign},
        # iterated |steps| times
        t = spec.qbar ** (2 * steps)
        facs = tuple((alpha, beta * t, e) for alpha, beta, e in facs)
        const = const * t ** zpow
        pref = (spec.q ** spec.sigma(spec.n) * spec.qbar ** spec.rbar(i)) ** (1 if sign > 0 else -1)
        const *= pref ** steps if steps > 0 else (1 / pref) ** (-steps)
        return const, zpow, facs

    def psi_series(self, lam: RPartition, i: int, sign: int,
                   order: int) -> TruncatedSeries:
        key = (lam, i, sign, order)
        if key not in self._psi_series:
            const, zpow, facs = self.psi_eigen_parts(lam, i, sign)
            point = INFINITY if sign > 0 else AT_ZERO
            self._psi_series[key] = expand_linear_product(
                facs, point, order, constant=const, zpower=zpow)
        return self._psi_series[key]

    def psi_mode_raw(self, lam: RPartition, i: int, b: int) -> Scalar:
        """Raw z^{-b} coefficient of the plus eigenvalue series at any integer
        color, via the mode-level sheet reduction."""
        spec = self.spec
        pref = ONE
        ii = i
        while ii < 1:
            pref *= spec.qbar ** (2 * b) * spec.q ** (-spec.sigma(spec.n)) \
                * spec.qbar ** (-spec.rbar(ii))
            ii += spec.n
        while ii > spec.n:
            pref *= spec.qbar ** (-2 * b) * spec.q ** spec.sigma(spec.n) \
                * spec.qbar ** spec.rbar(ii)
            ii -= spec.n
        return pref * self.psi_series(lam, ii, +1, b + 2).coeff(b)

    def psi_mode(self, lam: RPartition, i: int, sign: int, k: int) -> Scalar:
        """The mode psi^{sign}_{i,k} eigenvalue: the series convention strips
        the (-1)^{r_i} prefactor from the plus series."""
        if sign > 0:
            raw = self.psi_mode_raw(lam, i, k)
            return raw * (-1) ** self.spec.rbar(i)
        if not 1 <= i <= self.spec.n:
            raise ValueError("minus modes only built for colors 1..n")
        return self.psi_series(lam, i, -1, k + 2).coeff(k)

    def psi_operator(self, i: int, sign: int, k: int) -> GradedOperator:
        key = ("psi", i, sign, k)
        if key not in self._ops:
            def fn(d):
                out = {}
                for fp in self.fixed_points(d):
                    v = self.psi_mode(fp, i, sign, k)
                    if v != 0:
                        out[(fp, fp)] = v
                return out
            vs = k if sign > 0 else self.spec.rbar(i) - k
            self._ops[key] = GradedOperator((0,) * self.spec.n, fn, vs)
        return self._ops[key]

    def op_psi_modes(self, i: int, sign: int, max_mode: int) -> list[GradedOperator]:
        return [self.psi_operator(i, sign, k) for k in range(max_mode + 1)]

    # -- fine operators ---------------------------------------------------

    def _kernel(self, chi: dict[int, Scalar], i: int, j: int,
                context: dict) -> Scalar:
        spec = self.spec
        q2 = spec.q ** 2
        val = ONE
        for a in range(i, j - 1):
            den = 1 - q2 * chi[a] / chi[a + 1]
            if den == 0:
                raise AdjacentPoleError(
                    "tableau denominator 1 - q^2 chi_a/chi_{a+1} vanished",
                    context | {"label": a})
            val /= den
        for a in range(i, j):
            for b in range(a + 1, j):
                val *= zeta(spec, ColoredWeight(b, chi[b]),
                            ColoredWeight(a, chi[a]), self.convention)
        return val

    def prepared_chains_e(self, i: int, j: int,
                          d: tuple[int, ...]) -> list[PreparedChain]:
        """Chains for e_{[i;j)} out of every source of degree d, with the
        mode-independent factors precomputed."""
        key = (i, j, d)
        if key not in self._prepared_e:
            spec = self.spec
            q = spec.q
            chains: list[PreparedChain] = []
            for mu in self.fixed_points(d):
                mu_data = [(box_color(spec, b), box_weight(spec, b))
                           for b in mu.boxes()]
                for target, binding in _forward_chains(spec, mu, i, j):
                    pref = ONE
                    chi: dict[int, Scalar] = {}
                    for label, box in binding:
                        c = box_color(spec, box)
                        w = box_weight(spec, box)
                        chit = w * sheet_twist(spec, c, label)
                        chi[label] = chit
                        pref *= (1 / q - q) * tau_plus(spec, ColoredWeight(label, chit))
                        for bc, bw in mu_data:
                            pref *= zeta(spec, ColoredWeight(c, w),
                                         ColoredWeight(bc, bw), self.convention)
                    kern = self._kernel(chi, i, j, {
                        "kind": "e", "interval": (i, j),
                        "source": mu.lambdas, "target": target.lambdas})
                    chains.append(PreparedChain(target, mu, pref, kern,
                                                tuple(sorted(chi.items()))))
            self._prepared_e[key] = chains
        return self._prepared_e[key]

    def prepared_chains_f(self, i: int, j: int,
                          d: tuple[int, ...]) -> list[PreparedChain]:
        """Chains for f_{[i;j)} out of every source of degree d (the source is
        the larger fixed point; boxes are removed)."""
        key = (i, j, d)
        if key not in self._prepared_f:
            spec = self.spec
            q = spec.q
            chains: list[PreparedChain] = []
            for lam in self.fixed_points(d):
                den_factors = {
                    label: self._f_denominator_factors(lam, label)
                    for label in range(i, j)}
                for mu, binding in _backward_chains(spec, lam, i, j):
                    pref = ONE
                    chi: dict[int, Scalar] = {}
                    for label, box in binding:
                        c = box_color(spec, box)
                        chit = box_weight(spec, box) * sheet_twist(spec, c, label)
                        chi[label] = chit
                        den = evaluate_factor_product(den_factors[label], chit)
                        if den == 0:
                            raise PoleError(
                                "f denominator vanished; specialization not generic")
                        pref *= (1 - q ** -2) / den
                    kern = self._kernel(chi, i, j, {
                        "kind": "f", "interval": (i, j),
                        "source": lam.lambdas, "target": mu.lambdas})
                    chains.append(PreparedChain(mu, lam, pref, kern,
                                                tuple(sorted(chi.items()))))
            self._prepared_f[key] = chains
        return self._prepared_f[key]

    def e_fine(self, i: int, j: int, M: LaurentPolynomial) -> GradedOperator:
        """e^M_{[i;j)} for any integers i < j and Laurent polynomial M."""
        if not i < j:
            raise ValueError("need i < j")
        key = ("e_fine", i, j, M)
        if key not in self._ops:
            def fn(d):
                out: Block = {}
                for ch in self.prepared_chains_e(i, j, d):
                    v = ch.prefactor * ch.kernel * evaluate_polynomial(
                        self.spec, M, dict(ch.chi))
                    if v != 0:
                        kk = (ch.target, ch.source)
                        out[kk] = out.get(kk, ZERO) + v
                return {kk: v for kk, v in out.items() if v != 0}
            self._ops[key] = GradedOperator(
                interval_vector(self.spec.n, i, j), fn, homogeneous_degree(M))
        return self._ops[key]

    def f_fine(self, i: int, j: int, M: LaurentPolynomial) -> GradedOperator:
        if not i < j:
            raise ValueError("need i < j")
        key = ("f_fine", i, j, M)
        if key not in self._ops:
            def fn(d):
                out: Block = {}
                for ch in self.prepared_chains_f(i, j, d):
                    v = ch.prefactor * ch.kernel * evaluate_polynomial(
                        self.spec, M, dict(ch.chi))
                    if v != 0:
                        kk = (ch.target, ch.source)
                        out[kk] = out.get(kk, ZERO) + v
                return {kk: v for kk, v in out.items() if v != 0}
            hs = tuple(-x for x in interval_vector(self.spec.n, i, j))
            self._ops[key] = GradedOperator(hs, fn, homogeneous_degree(M))
        return self._ops[key]

    def e_interval_k(self, i: int, j: int, k: int) -> GradedOperator:
        """e_{[i;j),k}: the fine operator with M = z_i^k; the empty interval
        follows the delta convention e_{[i;i),k} = delta_{k,0}."""
        if i == j:
            return identity_operator(self) if k == 0 else zero_operator(self.spec.n)
        return self.e_fine(i, j, monomial_zk(i, k))

    def f_interval_k(self, i: int, j: int, k: int) -> GradedOperator:
        if i == j:
            return identity_operator(self) if k == 0 else zero_operator(self.spec.n)
        return self.f_fine(i, j, monomial_zk(i, k))

    def e_slope(self, i: int, j: int, k: int) -> GradedOperator:
        return self.e_fine(i, j, slope_monomial(self.spec.n, i, j, k))

    def f_slope(self, i: int, j: int, k: int) -> GradedOperator:
        return self.f_fine(i, j, slope_monomial(self.spec.n, i, j, k))

    # -- sheet-extended generators -----------------------------------------

    def e_extended(self, i: int, k: int) -> GradedOperator:
        """e_{i,k} for any integer i via the sheet reduction
        e_{i,k} = e_{i-n,k} * qbar^{-2k - r_{i+1}}."""
        spec = self.spec
        factor = ONE
        ii = i
        while ii > spec.n:
            factor *= spec.qbar ** (-2 * k - spec.rbar(ii + 1))
            ii -= spec.n
        while ii < 1:
            factor *= spec.qbar ** (2 * k + spec.rbar(ii + 1))
            ii += spec.n
        return self.e_simple(ii, k).scale(factor)

    def f_extended(self, i: int, k: int) -> GradedOperator:
        """f_{i,k} = f_{i-n,k} * qbar^{-2k + r_i}."""
        spec = self.spec
        factor = ONE
        ii = i
        while ii > spec.n:
            factor *= spec.qbar ** (-2 * k + spec.rbar(ii))
            ii -= spec.n
        while ii < 1:
            factor *= spec.qbar ** (2 * k - spec.rbar(ii))
            ii += spec.n
        return self.f_simple(ii, k).scale(factor)

    def psi_extended(self, i: int, sign: int, k: int) -> GradedOperator:
        """psi^{sign}_{i,k} for any integer i: the plus reduction multiplies
        mode k by qbar^{-2k} q^{sigma_n} qbar^{r_i} per sheet, the minus by
        its inverse with qbar^{+2k}."""
        spec = self.spec
        factor = ONE
        ii = i
        while ii > spec.n:
            step = spec.q ** spec.sigma(spec.n) * spec.qbar ** spec.rbar(ii)
            tw = spec.qbar ** (-2 * k) if sign > 0 else spec.qbar ** (2 * k)
            factor *= tw * (step if sign > 0 else 1 / step)
            ii -= spec.n
        while ii < 1:
            step = spec.q ** spec.sigma(spec.n) * spec.qbar ** spec.rbar(ii)
            tw = spec.qbar ** (2 * k) if sign > 0 else spec.qbar ** (-2 * k)
            factor *= tw * (1 / step if sign > 0 else step)
            ii += spec.n
        return self.psi_operator(ii, sign, k).scale(factor)


def _added(mu: RPartition, box: Box) -> RPartition:
    from .partitions import add_box
    return add_box(mu, box)


def _forward_chains(spec: ParameterSpecialization, mu: RPartition,
                    i: int, j: int):
    """(endpoint, ((label, box), ...)) for all chains adding boxes of classes
    i, i+1, ..., j-1 starting from mu."""
    from .partitions import add_box
    out = []
    def rec(cur: RPartition, label: int, binding: list):
        if label == j:
            out.append((cur, tuple(binding)))
            return
        for box in addable_boxes(spec, cur, label):
            binding.append((label, box))
            rec(add_box(cur, box), label + 1, binding)
            binding.pop()
    rec(mu, i, [])
    return out


def _backward_chains(spec: ParameterSpecialization, lam: RPartition,
                     i: int, j: int):
    """(startpoint, ((label, box), ...)) for all chains removing boxes of
    classes j-1, j-2, ..., i from lam; same chain set as the forward
    enumeration from each startpoint."""
    out = []
    def rec(cur: RPartition, label: int, binding: list):
        if label < i:
            out.append((cur, tuple(reversed(binding))))
            return
        for box in removable_boxes(spec, cur, label):
            binding.append((label, box))
            rec(remove_box(cur, box), label - 1, binding)
            binding.pop()
    rec(lam, j - 1, [])
    return out
