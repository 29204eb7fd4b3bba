import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtoroidal.partitions import (Box, RPartition, add_box,
                                  add_box_candidates, addable_boxes,
                                  box_color, box_weight, canonical_id, degree,
                                  degree_pairing, det_U, empty_rpartition,
                                  enumerate_chains, enumerate_fixed_points,
                                  enumerate_syt, from_id, interval_vector,
                                  remove_box, removable_boxes, restrict_V,
                                  sqrt_det_U, unit_vector)
from qtoroidal.scalars import ParameterSpecialization


def make_spec(n=2, r_vec=(1, 1), q=F(2), qbar_n=F(3)):
    u = tuple(F(k + 2, 7) for k in range(sum(r_vec)))
    return ParameterSpecialization(n=n, r_vec=tuple(r_vec), q=q,
                                   qbar_n=qbar_n, u=u)


SPEC = make_spec()


def test_empty_degree():
    fps = enumerate_fixed_points(SPEC, (0, 0))
    assert len(fps) == 1
    assert fps[0] == empty_rpartition(2)


def test_fixed_points_one_one():
    # boxes (0,0),(0,1) of the first diagram have colors 1,2; the second
    # diagram's have colors 2,3=1: three fixed points of degree (1,1)
    fps = enumerate_fixed_points(SPEC, (1, 1))
    assert len(fps) == 3
    ids = {canonical_id(fp) for fp in fps}
    assert ids == {"1,1|", "1|1", "|1,1"}


def test_fixed_points_one_zero():
    fps = enumerate_fixed_points(SPEC, (1, 0))
    assert len(fps) == 1
    assert fps[0].lambdas == ((1,), ())


def test_fixed_points_degree_assertion():
    for d in [(1, 1), (2, 1), (2, 2)]:
        for fp in enumerate_fixed_points(SPEC, d):
            assert degree(SPEC, fp) == d
            assert fp.size == sum(d)


def test_canonical_id_format():
    rp = RPartition(((2, 1), (1,), ()))
    assert canonical_id(rp) == "2,1|1|"
    assert from_id("2,1|1|", 3) == rp
    assert from_id(canonical_id(empty_rpartition(2)), 2) == empty_rpartition(2)


def test_add_box_candidates_empty():
    # class 1: only the (0,0) of the component with hat(a) = 1
    cands = add_box_candidates(SPEC, empty_rpartition(2), 1)
    assert [box for _, box in cands] == [Box(1, 0, 0)]
    cands2 = add_box_candidates(SPEC, empty_rpartition(2), 2)
    assert [box for _, box in cands2] == [Box(2, 0, 0)]


def test_add_box_candidates_two():
    # lambda^1 = (1): class-2 additions are (0,1) of the first diagram and
    # (0,0) of the second
    mu = RPartition(((1,), ()))
    cands = add_box_candidates(SPEC, mu, 2)
    assert {box for _, box in cands} == {Box(1, 0, 1), Box(2, 0, 0)}


def test_add_remove_roundtrip():
    mu = RPartition(((2, 1), (1,)))
    for cls in (1, 2):
        for lam, box in add_box_candidates(SPEC, mu, cls):
            assert remove_box(lam, box) == mu
            assert lam.contains(mu)


def test_addable_count_matches_bruteforce():
    for d in [(1, 1), (2, 1)]:
        for mu in enumerate_fixed_points(SPEC, d):
            for cls in (1, 2):
                brute = 0
                bound = mu.size + 1
                for a in (1, 2):
                    for x in range(bound + 1):
                        for y in range(bound + 1):
                            box = Box(a, x, y)
                            lam = _try_add(mu, box)
                            if lam is not None and \
                               (box_color(SPEC, box) - cls) % SPEC.n == 0:
                                brute += 1
                assert brute == len(addable_boxes(SPEC, mu, cls))


def _try_add(mu, box):
    lam = mu.lambdas[box.a - 1]
    cur = lam[box.y] if box.y < len(lam) else 0
    if box.x != cur or box.y > len(lam):
        return None
    if box.y > 0 and (box.y - 1 >= len(lam) or lam[box.y - 1] < box.x + 1):
        return None
    return add_box(mu, box)


def test_syt_single_box():
    mu = empty_rpartition(2)
    lam = RPartition(((1,), ()))
    chains = enumerate_syt(SPEC, mu, lam, (1, 2))
    assert len(chains) == 1
    assert chains[0].box_of(1) == Box(1, 0, 0)


def test_syt_column_of_two():
    # mu empty, lam = first diagram (1,1): the chain is forced
    mu = empty_rpartition(2)
    lam = RPartition(((1, 1), ()))
    chains = enumerate_syt(SPEC, mu, lam, (1, 3))
    assert len(chains) == 1
    ch = chains[0]
    assert ch.box_of(1) == Box(1, 0, 0)
    assert ch.box_of(2) == Box(1, 0, 1)
    assert [rp.size for rp in ch.chain] == [0, 1, 2]


def test_syt_mismatch_is_empty():
    mu = RPartition(((1,), ()))
    lam = RPartition(((1,), ()))
    assert enumerate_syt(SPEC, mu, lam, (1, 2)) == []
    # mu not contained in lam
    assert enumerate_syt(SPEC, RPartition(((2,), ())),
                         RPartition(((1, 1), ())), (1, 3)) == []


def syt_by_labeling(spec, mu, lam, interval):
    """Independent oracle: all bijective labelings of the skew boxes with the
    interval labels, color-matched, such that no box lies (transitively)
    above or to the right of a box with a greater label in the same diagram."""
    i, j = interval
    mu_boxes = set(mu.boxes())
    skew = [b for b in lam.boxes() if b not in mu_boxes]
    if len(skew) != j - i or not lam.contains(mu):
        return set()
    out = set()
    for perm in itertools.permutations(skew):
        labeling = dict(zip(range(i, j), perm))
        if any((box_color(spec, b) - a) % spec.n != 0
               for a, b in labeling.items()):
            continue
        ok = True
        for a, b in labeling.items():
            for a2, b2 in labeling.items():
                if b.a != b2.a:
                    continue
                above = b.x == b2.x and b.y > b2.y
                right = b.y == b2.y and b.x > b2.x
                if (above or right) and a2 > a:
                    ok = False
        if ok:
            out.add(frozenset(labeling.items()))
    return out


@pytest.mark.parametrize("n,r_vec", [(2, (1, 1)), (2, (2, 1)), (3, (1, 1, 1))])
def test_syt_chain_equals_labeling_oracle(n, r_vec):
    spec = make_spec(n=n, r_vec=r_vec)
    empt = empty_rpartition(spec.r)
    # exhaust pairs with lam of size <= 4 over all intervals of matching size
    seen_nonempty = 0
    for total in range(0, 5):
        for d in _degrees(n, total):
            for lam in enumerate_fixed_points(spec, d):
                subs = {empt}
                # all mu contained in lam, found by repeated box removal
                frontier = {lam}
                all_subs = set()
                while frontier:
                    nxt = set()
                    for rp in frontier:
                        all_subs.add(rp)
                        for cls in range(1, n + 1):
                            for box in removable_boxes(spec, rp, cls):
                                nxt.add(remove_box(rp, box))
                    frontier = nxt - all_subs
                for mu in all_subs:
                    size = lam.size - mu.size
                    if size == 0 or size > 4:
                        continue
                    for i in range(1, n + 1):
                        interval = (i, i + size)
                        chains = enumerate_syt(spec, mu, lam, interval)
                        chain_set = {frozenset(ch.labels) for ch in chains}
                        oracle = syt_by_labeling(spec, mu, lam, interval)
                        assert chain_set == oracle
                        seen_nonempty += bool(oracle)
    assert seen_nonempty > 0


def _degrees(n, total):
    if n == 2:
        return [(a, total - a) for a in range(total + 1)]
    return [(a, b, total - a - b) for a in range(total + 1)
            for b in range(total - a + 1)]


def test_degree_pairing_examples():
    assert degree_pairing((1, 0), (0, 0)) == 0
    assert degree_pairing((1, 0), (1, 0)) == 1   # <s^1, s^1> = 1 at n=2
    assert degree_pairing((0, 1), (1, 0)) == -1  # <s^2, s^1> = -1


@given(st.integers(2, 4), st.data())
@settings(max_examples=40)
def test_degree_pairing_bilinear(n, data):
    vec = st.tuples(*[st.integers(-3, 3)] * n)
    k, l, m = data.draw(vec), data.draw(vec), data.draw(vec)
    lhs = degree_pairing(k, tuple(x + y for x, y in zip(l, m)))
    assert lhs == degree_pairing(k, l) + degree_pairing(k, m)


def test_interval_vector():
    assert interval_vector(2, 1, 4) == (2, 1)
    assert interval_vector(2, 1, 1) == (0, 0)
    assert interval_vector(2, 4, 1) == (-2, -1)
    assert interval_vector(3, 0, 2) == (1, 0, 1)
    assert unit_vector(3, 4) == (1, 0, 0)


def test_restrict_v_and_det():
    lam = RPartition(((1,), ()))
    assert restrict_V(SPEC, 1, lam) == [SPEC.u[0] ** 2]
    assert restrict_V(SPEC, 2, lam) == []
    assert det_U(SPEC, 1, lam) == SPEC.q ** 2 * SPEC.u[0] ** 2
    # consistency of the chosen square root
    for i in (1, 2):
        for d in [(0, 0), (1, 1)]:
            for fp in enumerate_fixed_points(SPEC, d):
                assert sqrt_det_U(SPEC, i, fp) ** 2 == det_U(SPEC, i, fp)


def test_restrict_v_empty():
    empt = empty_rpartition(2)
    assert restrict_V(SPEC, 1, empt) == []
    assert det_U(SPEC, 1, empt) == SPEC.u[0] ** 2


def test_box_weight_sheets():
    # same column, n rows apart: same raw weight, colors differ by n
    b1, b2 = Box(1, 2, 0), Box(1, 2, 2)
    assert box_weight(SPEC, b1) == box_weight(SPEC, b2)
    assert box_color(SPEC, b2) - box_color(SPEC, b1) == SPEC.n


def test_enumerate_chains_groups_by_endpoint():
    mu = empty_rpartition(2)
    chains = enumerate_chains(SPEC, mu, (1, 3))
    endpoints = {ch.chain[-1] for ch in chains}
    # adding a class-1 then a class-2 box from the empty 2-partition
    assert RPartition(((1, 1), ())) in endpoints
    assert RPartition(((1,), (1,))) in endpoints


def test_universal_class_det_telescopes():
    from qtoroidal.partitions import universal_class_terms
    for d in [(0, 0), (1, 1), (2, 1)]:
        for fp in enumerate_fixed_points(SPEC, d):
            for i in (1, 2):
                prod = F(1)
                for value, sign in universal_class_terms(SPEC, i, fp):
                    prod *= value if sign > 0 else 1 / value
                assert prod == det_U(SPEC, i, fp)
