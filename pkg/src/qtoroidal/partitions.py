"""r-partitions (torus fixed points), degree vectors, box moves, and
standard-Young-tableau chains.

A fixed point is an r-tuple of partitions.  The box (x, y) of the a-th
diagram has natural color hat(a) + y and raw weight u_a^2 q^{2x}; the degree
vector counts boxes per color class mod n.  Tableaux are defined as chains of
one-box additions with prescribed color classes; the labeling description
("no box directly above or to the right of a box with a greater label") is
checked against this definition by an independent oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .scalars import ParameterSpecialization, Scalar


class Box(NamedTuple):
    a: int  # component, 1-based
    x: int
    y: int


@dataclass(frozen=True)
class RPartition:
    lambdas: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for lam in self.lambdas:
            if any(p <= 0 for p in lam):
                raise ValueError("parts must be positive")
            if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
                raise ValueError("parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(sum(lam) for lam in self.lambdas)

    def boxes(self) -> list[Box]:
        return [Box(a, x, y)
                for a, lam in enumerate(self.lambdas, start=1)
                for y, row in enumerate(lam)
                for x in range(row)]

    def contains(self, other: "RPartition") -> bool:
        for lam, mu in zip(self.lambdas, other.lambdas):
            if len(mu) > len(lam):
                return False
            if any(m > l for l, m in zip(lam, mu)):
                return False
        return True


def empty_rpartition(r: int) -> RPartition:
    return RPartition(tuple(() for _ in range(r)))


def canonical_id(rp: RPartition) -> str:
    """Components separated by '|', parts comma-separated: "2,1|1|" for
    ((2,1), (1,), ())."""
    return "|".join(",".join(str(p) for p in lam) for lam in rp.lambdas)


def from_id(s: str, r: int) -> RPartition:
    comps = s.split("|")
    if len(comps) != r:
        raise ValueError(f"malformed partition id {s!r}")
    return RPartition(tuple(
        tuple(int(p) for p in comp.split(",")) if comp else ()
        for comp in comps))


def box_color(spec: ParameterSpecialization, box: Box) -> int:
    return spec.hat(box.a) + box.y


def box_weight(spec: ParameterSpecialization, box: Box) -> Scalar:
    return spec.u[box.a - 1] ** 2 * spec.q ** (2 * box.x)


def degree(spec: ParameterSpecialization, rp: RPartition) -> tuple[int, ...]:
    d = [0] * spec.n
    for box in rp.boxes():
        d[(box_color(spec, box) - 1) % spec.n] += 1
    return tuple(d)


# ---------------------------------------------------------------------------
# degree-vector arithmetic
# ---------------------------------------------------------------------------

def unit_vector(n: int, i: int) -> tuple[int, ...]:
    v = [0] * n
    v[(i - 1) % n] = 1
    return tuple(v)


def interval_vector(n: int, i: int, j: int) -> tuple[int, ...]:
    """[i; j) in Z^n: sum of unit vectors at residues i..j-1, with
    [i; j) = -[j; i) for i > j."""
    if i <= j:
        v = [0] * n
        for a in range(i, j):
            v[(a - 1) % n] += 1
        return tuple(v)
    return tuple(-x for x in interval_vector(n, j, i))


def add_vectors(d: Sequence[int], e: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(d, e))


def sub_vectors(d: Sequence[int], e: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(d, e))


def degree_pairing(k: Sequence[int], l: Sequence[int]) -> int:
    """<k, l> = sum_i k_i l_i - k_{i-1} l_i with k_0 = k_n."""
    n = len(k)
    assert len(l) == n
    return sum(k[i] * l[i] - k[i - 1] * l[i] for i in range(n))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions_of(m: int) -> tuple[tuple[int, ...], ...]:
    def gen(rest: int, mx: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, mx), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(gen(m, m))


@lru_cache(maxsize=None)
def _multipartitions(r: int, total: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    out = []
    def rec(comp: int, rem: int, cur: tuple):
        if comp == r:
            if rem == 0:
                out.append(cur)
            return
        for m in range(rem + 1):
            for lam in _partitions_of(m):
                rec(comp + 1, rem - m, cur + (lam,))
    rec(0, total, ())
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_fixed_points(spec: ParameterSpecialization,
                           d: tuple[int, ...]) -> tuple[RPartition, ...]:
    """All r-partitions with the given color-class box counts, in the
    deterministic order of their part tuples."""
    out = []
    for lambdas in _multipartitions(spec.r, sum(d)):
        rp = RPartition(lambdas)
        if degree(spec, rp) == tuple(d):
            out.append(rp)
    out.sort(key=lambda rp: rp.lambdas)
    for rp in out:
        assert degree(spec, rp) == tuple(d)
    return tuple(out)


def add_box(rp: RPartition, box: Box) -> RPartition:
    lam = list(rp.lambdas[box.a - 1])
    if box.y == len(lam):
        lam.append(1)
    else:
        lam[box.y] += 1
    ls = list(rp.lambdas)
    ls[box.a - 1] = tuple(lam)
    return RPartition(tuple(ls))


def remove_box(rp: RPartition, box: Box) -> RPartition:
    lam = list(rp.lambdas[box.a - 1])
    lam[box.y] -= 1
    if lam[box.y] == 0:
        lam.pop()
    ls = list(rp.lambdas)
    ls[box.a - 1] = tuple(lam)
    return RPartition(tuple(ls))


def addable_boxes(spec: ParameterSpecialization, rp: RPartition,
                  color_class: int) -> list[Box]:
    """Corners where a box of natural color = color_class mod n can be added."""
    out = []
    for a, lam in enumerate(rp.lambdas, start=1):
        rows = len(lam)
        for y in range(rows + 1):
            cur = lam[y] if y < rows else 0
            fits = y == 0 or lam[y - 1] > cur
            if fits and (spec.hat(a) + y - color_class) % spec.n == 0:
                out.append(Box(a, cur, y))
    return out


def add_box_candidates(spec: ParameterSpecialization, rp: RPartition,
                       color_class: int) -> list[tuple[RPartition, Box]]:
    return [(add_box(rp, box), box) for box in addable_boxes(spec, rp, color_class)]


def removable_boxes(spec: ParameterSpecialization, rp: RPartition,
                    color_class: int) -> list[Box]:
    out = []
    for a, lam in enumerate(rp.lambdas, start=1):
        for y, row in enumerate(lam):
            below = lam[y + 1] if y + 1 < len(lam) else 0
            if row > below and (spec.hat(a) + y - color_class) % spec.n == 0:
                out.append(Box(a, row - 1, y))
    return out


# ---------------------------------------------------------------------------
# standard Young tableaux as chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SYTChain:
    """mu = nu^(i) c nu^(i+1) c ... c nu^(j) with step a adding one box of
    color class a mod n, the box carrying label a."""
    interval: tuple[int, int]
    chain: tuple[RPartition, ...]
    labels: tuple[tuple[int, Box], ...]  # (label, box), labels increasing

    def box_of(self, label: int) -> Box:
        return dict(self.labels)[label]


def enumerate_chains(spec: ParameterSpecialization, mu: RPartition,
                     interval: tuple[int, int]) -> list[SYTChain]:
    """All chains starting at mu for the label sequence i..j-1, grouped over
    every reachable endpoint."""
    i, j = interval
    if not i < j:
        raise ValueError("need i < j")
    out = []
    def rec(cur: RPartition, label: int, chain: list[RPartition],
            labels: list[tuple[int, Box]]):
        if label == j:
            out.append(SYTChain((i, j), tuple(chain), tuple(labels)))
            return
        for box in addable_boxes(spec, cur, label):
            nxt = add_box(cur, box)
            chain.append(nxt)
            labels.append((label, box))
            rec(nxt, label + 1, chain, labels)
            chain.pop()
            labels.pop()
    rec(mu, i, [mu], [])
    return out


def enumerate_syt(spec: ParameterSpecialization, mu: RPartition, lam: RPartition,
                  interval: tuple[int, int]) -> list[SYTChain]:
    """Chains from mu ending exactly at lam; empty when mu is not contained in
    lam or the skew boxes do not match the interval colorwise."""
    if not lam.contains(mu):
        return []
    return [ch for ch in enumerate_chains(spec, mu, interval)
            if ch.chain[-1] == lam]


# ---------------------------------------------------------------------------
# tautological restrictions
# ---------------------------------------------------------------------------

def restrict_V(spec: ParameterSpecialization, i: int, rp: RPartition) -> list[Scalar]:
    """Multiset of V_i values at the fixed point: twisted weights of the boxes
    of color = i mod n, for any integer i."""
    out = []
    for box in rp.boxes():
        c = box_color(spec, box)
        if (c - i) % spec.n == 0:
            out.append(box_weight(spec, box) * spec.qbar_n ** (2 * (c - i)))
    return out


def universal_class_terms(spec: ParameterSpecialization, i: int,
                          rp: RPartition) -> list[tuple[Scalar, int]]:
    """[U_i] at the fixed point as signed line terms: the frame squares plus
    (q^2 - 1)(V_i - V_{i-1}) expanded with multiplicities +-1."""
    q2 = spec.q ** 2
    terms: list[tuple[Scalar, int]] = []
    for a in spec.frame_indices(i):
        terms.append((spec.u_ext(a) ** 2, 1))
    for v in restrict_V(spec, i, rp):
        terms.append((v, -1))
        terms.append((q2 * v, 1))
    for w in restrict_V(spec, i - 1, rp):
        terms.append((w, 1))
        terms.append((q2 * w, -1))
    return terms


def det_U(spec: ParameterSpecialization, i: int, rp: RPartition) -> Scalar:
    d = degree(spec, rp)
    di = d[(i - 1) % spec.n]
    dim1 = d[(i - 2) % spec.n]
    val = spec.q ** (2 * (di - dim1))
    for a in spec.frame_indices(i):
        val *= spec.u_ext(a) ** 2
    return val


def sqrt_det_U(spec: ParameterSpecialization, i: int, rp: RPartition) -> Scalar:
    d = degree(spec, rp)
    di = d[(i - 1) % spec.n]
    dim1 = d[(i - 2) % spec.n]
    val = spec.q ** (di - dim1)
    for a in spec.frame_indices(i):
        val *= spec.u_ext(a)
    return val
