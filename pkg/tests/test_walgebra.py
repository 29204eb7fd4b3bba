from fractions import Fraction as F

import pytest

import qtoroidal.walgebra as walgebra
from qtoroidal.action import Representation
from qtoroidal.partitions import empty_rpartition, interval_vector
from qtoroidal.scalars import ParameterSpecialization, random_specialization
from qtoroidal.walgebra import (WSpec, build_w, check_annihilation,
                                check_s_range_stability, check_w_periodicity,
                                sharpness_witness, sigma, term_triples,
                                w_term_sign)


def make_rep(n=2, r_vec=(1, 1), seed=5, window=3):
    return Representation(random_specialization(seed, n, r_vec, window))


REP = make_rep()
SPEC = REP.spec


def test_sigma_values():
    assert sigma(SPEC, 0) == 0
    assert sigma(SPEC, SPEC.n) == sum(SPEC.r_vec)
    assert sigma(SPEC, -1) == -SPEC.rbar(0)
    spec21 = random_specialization(1, 2, (2, 1), 2)
    assert sigma(spec21, 1) == 2
    assert sigma(spec21, 2) == 3
    assert sigma(spec21, -1) == -1  # -r_0 = -r_2
    assert sigma(spec21, -2) == -1 - 2


def test_term_triples_edges():
    # interior s: a, c >= 1
    assert term_triples(0, 1, 2, 3) == [(1, 1, 1), (1, 0, 2), (2, 0, 1)]
    # s = i: a = 0 only
    assert term_triples(1, 1, 2, 2) == [(0, 1, 1), (0, 0, 2)]
    # s = i = j: a = c = 0
    assert term_triples(1, 1, 1, 2) == [(0, 2, 0)]
    assert term_triples(1, 1, 1, -1) == []


def test_w_term_sign_edges():
    assert w_term_sign(0, 1, 2) == 1        # generic: (-1)^{j-s}
    assert w_term_sign(1, 1, 2) == 1        # s = i: extra flip of (-1)^1
    assert w_term_sign(2, 2, 2) == 1        # both edges cancel
    assert w_term_sign(1, 2, 2) == -1       # generic term below i = j
    assert w_term_sign(0, 2, 2) == 1
    assert w_term_sign(1, 3, 2) == -1       # s = j only


def test_vacuum_diagonal_reduces_to_psi_series_coefficient():
    # on the vacuum, W_{ii}^k acts by the raw z^{-k} series coefficient
    vac = empty_rpartition(SPEC.r)
    d0 = (0,) * SPEC.n
    for i in (1, 2):
        for k in range(0, SPEC.rbar(i) + 3):
            op = build_w(REP, WSpec(i, i, k, 0))
            entry = op.block(d0).get((vac, vac), F(0))
            assert entry == REP.psi_mode_raw(vac, i, k)
            if k > SPEC.rbar(i):
                assert entry == 0


def test_vacuum_column_zero_for_lowering_interval():
    # j > i on the vacuum window: the lowering factor needs boxes
    op = build_w(REP, WSpec(1, 2, 2, 0))
    assert op.block((0, 0)) == {}


def test_w_shift_matches_grading():
    for (i, j, k) in [(1, 2, 2), (2, 1, 1), (0, 2, 3)]:
        op = build_w(REP, WSpec(i, j, k, 2))
        assert op.hshift == tuple(-x for x in interval_vector(SPEC.n, i, j))
        assert op.vshift == k
        for d in REP.degrees(2):
            for (t, s) in op.block(d):
                assert s.size == sum(d)
                assert t.size == sum(d) - (j - i)


def test_annihilation_small_grid():
    for (i, j) in [(1, 1), (1, 2), (2, 1), (0, 1)]:
        k = SPEC.rbar(j) + 1
        rep = check_annihilation(REP, WSpec(i, j, k, 3))
        assert rep["status"] == "PASS", rep["witness"]


def test_annihilation_failure_reports_witness():
    # k = r_j is not covered by the theorem: the report flags the nonzero
    # entry instead of raising
    rep = check_annihilation(REP, WSpec(1, 1, SPEC.rbar(1), 1))
    assert rep["status"] == "FAIL"
    assert rep["witness"] is not None
    assert "value" in rep["witness"]


def test_s_range_stability():
    assert check_s_range_stability(REP, WSpec(1, 2, 2, 2))
    assert check_s_range_stability(REP, WSpec(2, 2, 2, 2))


def test_sharpness_witness():
    for i in (1, 2):
        w = sharpness_witness(REP, i)
        assert w["status"] == "PASS"
        assert w["witness"]["vacuum_entry"] != "0/1"


def test_w_periodicity():
    for (i, j) in [(1, 1), (1, 2), (2, 1)]:
        for k in (SPEC.rbar(j), SPEC.rbar(j) + 1):
            rep = check_w_periodicity(REP, i, j, k, 2)
            assert rep["status"] == "PASS", rep["witness"]


def test_w_periodicity_mutation_detected(monkeypatch):
    # harness self-check: a wrong prefactor must be reported as FAIL
    original = walgebra.w_periodicity_factor
    monkeypatch.setattr(walgebra, "w_periodicity_factor",
                        lambda spec, i, j, k: original(spec, i, j, k) * 2)
    rep = check_w_periodicity(REP, 1, 1, 1, 1)
    assert rep["status"] == "FAIL"
    assert rep["witness"] is not None


def test_asymmetric_r_annihilation():
    rep21 = make_rep(n=2, r_vec=(2, 1), seed=2, window=2)
    for (i, j) in [(1, 2), (2, 1), (2, 2)]:
        k = rep21.spec.rbar(j) + 1
        out = check_annihilation(rep21, WSpec(i, j, k, 2))
        assert out["status"] == "PASS", out["witness"]
