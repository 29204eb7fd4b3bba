from fractions import Fraction as F

import pytest

from qtoroidal.action import Representation, all_degree_vectors
from qtoroidal.colored import ColoredWeight, monomial_zk, tau_plus, zeta
from qtoroidal.partitions import (Box, RPartition, add_box_candidates,
                                  box_color, box_weight, canonical_id,
                                  empty_rpartition, sqrt_det_U)
from qtoroidal.scalars import ParameterSpecialization, random_specialization


def make_rep(n=2, r_vec=(1, 1), seed=3, window=3):
    return Representation(random_specialization(seed, n, r_vec, window))


REP = make_rep()
SPEC = REP.spec
VACUUM = empty_rpartition(SPEC.r)


def test_e_vacuum_entry():
    # one-box element out of the vacuum: empty zeta product, so the value is
    # (1/q - q) chi^k tau_+(chi) with chi = u_1^2
    op = REP.e_simple(1, 0)
    blk = op.block((0, 0))
    lam = RPartition(((1,), ()))
    q, u1, u2 = SPEC.q, SPEC.u[0], SPEC.u[1]
    expected = (1 / q - q) * (u2 / q - q * u1 ** 2 / u2)
    assert blk[(lam, VACUUM)] == expected
    # k twists by the box weight power
    blk2 = REP.e_simple(1, 3).block((0, 0))
    assert blk2[(lam, VACUUM)] == expected * (u1 ** 2) ** 3


def test_e_block_row_count_matches_addable_corners():
    for d in [(1, 0), (1, 1), (2, 1)]:
        for i in (1, 2):
            blk = REP.e_simple(i, 0).block(d)
            expected = sum(len(add_box_candidates(SPEC, mu, i))
                           for mu in REP.fixed_points(d))
            assert len(blk) == expected  # all entries generically nonzero


def test_f_kills_vacuum():
    for i in (1, 2):
        assert REP.f_simple(i, 0).block((0, 0)) == {}


def test_f_single_box_entry():
    # <vac| f |box> = (1 - q^-2) chi^k / lim[tau_- * zeta-self]: the limit
    # replaces the vanishing tau factor by (q - 1/q) u_1
    lam = RPartition(((1,), ()))
    blk = REP.f_simple(1, 0).block((1, 0))
    q, u1 = SPEC.q, SPEC.u[0]
    # tau_-(z)*zeta(chi/z) at z -> chi = u_1^2:
    # (u_1 - z/u_1) -> -(1/u_1)(z - chi); zeta-self pole (chi q - z/q)/(chi - z)
    expected_den = (1 / u1) * (u1 ** 2 * q - u1 ** 2 / q)
    assert blk[(VACUUM, lam)] == (1 - q ** -2) / expected_den


def test_entrywise_mode_ratio():
    # between modes k and k' every entry scales by chi^(k-k')
    for i in (1, 2):
        b0 = REP.e_simple(i, 0).block((1, 1))
        b2 = REP.e_simple(i, 2).block((1, 1))
        assert set(b0) == set(b2)
        for (lam, mu), v in b0.items():
            skew = [b for b in lam.boxes() if b not in mu.boxes()]
            chi = REP.bound_weight(skew[0], i)
            assert b2[(lam, mu)] == v * chi ** 2


def test_shift_discipline():
    for d in [(1, 1), (2, 0)]:
        for i in (1, 2):
            blk = REP.e_simple(i, 0).block(d)
            for (lam, mu), _ in blk.items():
                assert mu.size == sum(d)
                assert lam.size == sum(d) + 1


def test_psi_vacuum_mode_count():
    # the vacuum plus-eigenvalue is a degree-r_i polynomial in 1/z:
    # exactly r_i + 1 nonzero modes
    for i in (1, 2):
        ri = SPEC.rbar(i)
        modes = [REP.psi_mode(VACUUM, i, +1, k) for k in range(ri + 3)]
        assert all(m != 0 for m in modes[:ri + 1])
        assert all(m == 0 for m in modes[ri + 1:])


def test_psi_zero_modes_inverse_pair():
    for d in [(0, 0), (1, 1), (2, 1)]:
        for fp in REP.fixed_points(d):
            for i in (1, 2):
                assert REP.psi_mode(fp, i, +1, 0) * \
                    REP.psi_mode(fp, i, -1, 0) == 1


def test_psi_zero_mode_det_route():
    # psi^+_{i,0} eigenvalue equals q^{sigma_i}/sqrt(det U_i), computed
    # independently from the tautological restriction
    for d in [(0, 0), (1, 1), (2, 1)]:
        for fp in REP.fixed_points(d):
            for i in (1, 2):
                expected = SPEC.q ** SPEC.sigma(i) / sqrt_det_U(SPEC, i, fp)
                assert REP.psi_mode(fp, i, +1, 0) == expected


def test_fine_equals_simple_entrywise():
    degs = REP.degrees(2)
    for i in (1, 2):
        for k in (-1, 0, 2):
            fine = REP.e_fine(i, i + 1, monomial_zk(i, k))
            assert fine.equal_on(REP.e_simple(i, k), degs)
            ffine = REP.f_fine(i, i + 1, monomial_zk(i, k))
            assert ffine.equal_on(REP.f_simple(i, k), degs)


def test_empty_interval_convention():
    assert REP.e_interval_k(1, 1, 0).block((1, 1)) == {
        (fp, fp): F(1) for fp in REP.fixed_points((1, 1))}
    assert REP.e_interval_k(1, 1, 2).block((1, 1)) == {}
    assert REP.f_interval_k(2, 2, 0).block((1, 0)) == {
        (fp, fp): F(1) for fp in REP.fixed_points((1, 0))}


def test_fine_no_tableau_gives_zero():
    # degree vector of [1;3) is (1,1): block out of (0,1) would need a
    # class-1 then class-2 addition; entries exist only where chains do
    op = REP.e_interval_k(1, 3, 1)
    blk = op.block((0, 0))
    targets = {lam for (lam, mu) in blk}
    for lam in targets:
        assert lam.size == 2


def test_extended_generators_match_direct_range():
    degs = REP.degrees(2)
    for i in (1, 2):
        for k in (0, 1):
            assert REP.e_extended(i, k).equal_on(REP.e_simple(i, k), degs)
            assert REP.f_extended(i, k).equal_on(REP.f_simple(i, k), degs)


def test_extended_psi_prefactor():
    # psi^+_{i,0} vs psi^+_{i-n,0}: ratio q^{r_1+...+r_n} qbar^{r_i}
    spec = SPEC
    for i in (1, 2):
        hi = REP.psi_extended(i + spec.n, +1, 0)
        lo = REP.psi_operator(i, +1, 0)
        ratio = spec.q ** spec.sigma(spec.n) * spec.qbar ** spec.rbar(i)
        for d in [(0, 0), (1, 1)]:
            for fp in REP.fixed_points(d):
                assert hi.block(d)[(fp, fp)] == \
                    lo.block(d)[(fp, fp)] * ratio


def test_double_reduction_composes():
    spec = SPEC
    for k in (0, 1):
        one = REP.e_extended(1 + spec.n, k)
        two = REP.e_extended(1 + 2 * spec.n, k)
        step = spec.qbar ** (-2 * k - spec.rbar(2))
        for d in [(0, 0), (1, 1)]:
            b1 = one.block(d)
            b2 = two.block(d)
            assert set(b1) == set(b2)
            for key, v in b1.items():
                assert b2[key] == v * step


def test_operator_compose_and_add():
    e = REP.e_simple(1, 0)
    f = REP.f_simple(1, 0)
    ef = e.compose(f)
    assert ef.hshift == (0, 0)
    s = ef.add(ef.scale(F(-1)))
    assert s.is_zero_on(REP.degrees(2))
    with pytest.raises(ValueError):
        e.add(f)


def test_all_degree_vectors():
    degs = all_degree_vectors(2, 2)
    assert (0, 0) in degs and (2, 0) in degs and (1, 1) in degs
    assert len(degs) == 6


def test_slope_operator_single_column():
    # j - i = 1: the slope kernel is (z_i qbar_n^{2i})^k, a qbar twist of the
    # plain mode operator
    for i in (1, 2):
        for k in (0, 1, 2):
            lhs = REP.e_slope(i, i + 1, k)
            rhs = REP.e_simple(i, k).scale(SPEC.qbar_n ** (2 * i * k))
            assert lhs.equal_on(rhs, REP.degrees(2))
            lhs_f = REP.f_slope(i, i + 1, k)
            rhs_f = REP.f_simple(i, k).scale(SPEC.qbar_n ** (2 * i * k))
            assert lhs_f.equal_on(rhs_f, REP.degrees(2))


def test_graded_vector_application():
    from qtoroidal.action import GradedVector, vacuum_vector
    v = vacuum_vector(REP, 2)
    stepped = v.apply(REP.e_simple(1, 0)).apply(REP.e_simple(2, 0))
    assert all(fp.size == 2 for fp in stepped.entries)
    assert stepped.entries  # generic coefficients are nonzero
    # diagonal operators scale componentwise
    scaled = stepped.apply(REP.psi_operator(1, +1, 0))
    for fp, val in scaled.entries.items():
        assert val == stepped.entries[fp] * REP.psi_mode(fp, 1, +1, 0)
    # out-of-window components are dropped and counted
    clipped = stepped.apply(REP.e_simple(1, 0))
    assert clipped.entries == {} and clipped.dropped > 0
    assert GradedVector(SPEC, 2, {}) == GradedVector(SPEC, 2, {})
