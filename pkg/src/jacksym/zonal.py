"""Matching-indexed polynomial formulas in multirectangular coordinates
at alpha = 2.

The alpha = 1 machinery built on pairs of permutations is replaced by
triples of perfect matchings of [2k]: cycles become blocks of pairwise
joins, the sign becomes the alternating weight (-2)^(number of join
blocks), and irreducible characters become zonal spherical values keyed
by the type of a matching pair.  Signed sums of the triple-indexed
building block produce the alpha = 2 character, shifted zonal and
symmetrized Kostka polynomials.

`b2_coeff` is the exploratory analogue of the alpha = 1 block-group sum;
it carries no sign guarantee and is only searched on demand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .combinatorics import (
    LimitExceeded,
    SetPartition,
    canonical_blocks,
    compose,
    consecutive_intervals,
    coset_type,
    join,
    pair_partitions_stream,
    partition_type,
    type_of_pair,
)
from .exact import MultiPoly
from .jack import zonal_spherical
from .partitions import Partition, SizeMismatch, partitions_of
from .stanley import _block_perms, _pair_terms

TRIPLE_LIMIT = 4
B2_LIMIT = 2


def _ground_pairs(sp: SetPartition) -> int:
    """Number of element pairs covered by a matching of [2k]; validates shape."""
    if any(len(b) != 2 for b in sp):
        raise SizeMismatch("expected a perfect matching")
    return sum(len(b) for b in sp) // 2


def n2_poly(s0, s1, s2, d: int) -> MultiPoly:
    """Sum over compatible labellings of the blocks of two joins.

    The p-labelled side is join(s0, s2), the r-labelled side is
    join(s0, s1); compatibility is the same block-meeting inequality as
    in the permutation case.
    """
    s0 = canonical_blocks(s0)
    s1 = canonical_blocks(s1)
    s2 = canonical_blocks(s2)
    if not (_ground_pairs(s0) == _ground_pairs(s1) == _ground_pairs(s2)):
        raise SizeMismatch("matchings cover different ground sets")
    return MultiPoly(d, dict(_pair_terms(join(s0, s2), join(s0, s1), d)))


def pair_of_type(mu: Partition) -> tuple[SetPartition, SetPartition]:
    """A canonical pair of matchings whose join has half block sizes mu.

    Part m of mu occupies 2m consecutive elements; the first matching
    pairs them consecutively and the second pairs them cyclically shifted
    by one, so their join is a single block of size 2m.
    """
    first: list[tuple[int, int]] = []
    second: list[tuple[int, int]] = []
    base = 0
    for m in mu:
        elems = list(range(base + 1, base + 2 * m + 1))
        first.extend((elems[2 * i], elems[2 * i + 1]) for i in range(m))
        second.extend(
            (elems[(2 * i + 1) % (2 * m)], elems[(2 * i + 2) % (2 * m)])
            for i in range(m)
        )
        base += 2 * m
    return canonical_blocks(first), canonical_blocks(second)


@lru_cache(maxsize=None)
def type_census(k: int) -> tuple[tuple[Partition, int], ...]:
    """Count of matching pairs of [2k] of each type, by full enumeration."""
    out: dict[Partition, int] = {}
    pps = tuple(pair_partitions_stream(k))
    for a in pps:
        for b in pps:
            t = type_of_pair(a, b)
            out[t] = out.get(t, 0) + 1
    return tuple(sorted(out.items()))


def ch2_multirect(mu: Partition, d: int, pair=None) -> MultiPoly:
    """Character polynomial at alpha = 2: alternating sum over one free
    matching against a fixed pair of the requested type.

    The result does not depend on which type-mu pair is fixed; pass
    `pair` to exercise a different representative.
    """
    k = sum(mu)
    if pair is None:
        s1, s2 = pair_of_type(mu)
    else:
        s1, s2 = canonical_blocks(pair[0]), canonical_blocks(pair[1])
        if type_of_pair(s1, s2) != tuple(sorted(mu, reverse=True)):
            raise SizeMismatch("representative pair does not have type mu")
    acc: dict[tuple[int, ...], int] = {}
    for s0 in pair_partitions_stream(k):
        r_join = join(s0, s1)
        c = (-2) ** len(r_join)
        for key, wgt in _pair_terms(join(s0, s2), r_join, d):
            acc[key] = acc.get(key, 0) + c * wgt
    sign = -1 if k % 2 else 1
    denom = 2 ** len(mu)
    return MultiPoly(d, {key: Fraction(sign * v, denom) for key, v in acc.items()})


def zstar_multirect(mu: Partition, d: int, unbounded: bool = False) -> MultiPoly:
    """Shifted zonal polynomial: spherical-weighted sum over matching triples.

    Pairs of matchings are bucketed by type; the inner alternating sum
    over the free matching is evaluated once per type on the canonical
    representative (the full triple sum is invariant under relabelling
    all three matchings simultaneously) and weighted by the bucket size.
    """
    k = sum(mu)
    if k > TRIPLE_LIMIT and not unbounded:
        raise LimitExceeded(f"matching triple sum for k={k} needs unbounded=True")
    acc: dict[tuple[int, ...], Fraction] = {}
    for nu, count in type_census(k):
        scale = zonal_spherical(mu, nu) * count
        if not scale:
            continue
        s1, s2 = pair_of_type(nu)
        inner: dict[tuple[int, ...], int] = {}
        for s0 in pair_partitions_stream(k):
            r_join = join(s0, s1)
            c = (-2) ** len(r_join)
            for key, wgt in _pair_terms(join(s0, s2), r_join, d):
                inner[key] = inner.get(key, 0) + c * wgt
        for key, v in inner.items():
            acc[key] = acc.get(key, Fraction()) + scale * v
    sign = -1 if k % 2 else 1
    norm = Fraction(sign * factorial(k), factorial(2 * k))
    return MultiPoly(d, {key: norm * v for key, v in acc.items()})


def _zstar_raw(mu: Partition, d: int) -> MultiPoly:
    """Literal triple enumeration of `zstar_multirect`; tiny-k cross-check."""
    k = sum(mu)
    pps = tuple(pair_partitions_stream(k))
    acc: dict[tuple[int, ...], Fraction] = {}
    for s1 in pps:
        for s2 in pps:
            w = zonal_spherical(mu, type_of_pair(s1, s2))
            if not w:
                continue
            for s0 in pps:
                r_join = join(s0, s1)
                c = w * (-2) ** len(r_join)
                for key, wgt in _pair_terms(join(s0, s2), r_join, d):
                    acc[key] = acc.get(key, Fraction()) + c * wgt
    sign = -1 if k % 2 else 1
    norm = Fraction(sign * factorial(k), factorial(2 * k))
    return MultiPoly(d, {key: norm * v for key, v in acc.items()})


def _matchings_within(sp: SetPartition):
    """All matchings whose pairs stay inside the blocks of sp."""
    per_block = []
    for block in sp:
        if len(block) % 2:
            raise ValueError("blocks must have even sizes")
        local = []
        for mat in pair_partitions_stream(len(block) // 2, unbounded=True):
            local.append(tuple((block[a - 1], block[b - 1]) for a, b in mat))
        per_block.append(local)
    for combo in product(*per_block):
        yield canonical_blocks(b for part in combo for b in part)


def ko2_multirect(mu: Partition, d: int, blocks: SetPartition | None = None,
                  unbounded: bool = False) -> MultiPoly:
    """Symmetrized Kostka polynomial at alpha = 2.

    The matching pair carrying the type (the two partners joined against
    the free matching) is confined to the blocks of the target set
    partition: consecutive intervals of sizes 2*mu_i by default, and any
    set partition with those block sizes gives the same result.  The
    matching appearing in both joins stays free; confining it instead
    breaks the evaluation on small diagrams.
    """
    k = sum(mu)
    if k > TRIPLE_LIMIT and not unbounded:
        raise LimitExceeded(f"matching triple sum for k={k} needs unbounded=True")
    doubled = tuple(2 * m for m in mu)
    target = consecutive_intervals(doubled) if blocks is None else canonical_blocks(blocks)
    if partition_type(target) != tuple(sorted(doubled, reverse=True)):
        raise SizeMismatch("target blocks do not have sizes 2*mu")
    restricted = tuple(_matchings_within(target))
    acc: dict[tuple[int, ...], int] = {}
    for s0 in pair_partitions_stream(k):
        joins = [join(s0, m) for m in restricted]
        for r_join in joins:
            c = (-2) ** len(r_join)
            for p_join in joins:
                for key, wgt in _pair_terms(p_join, r_join, d):
                    acc[key] = acc.get(key, 0) + c * wgt
    sign = -1 if k % 2 else 1
    norm = 1
    for m in mu:
        norm *= factorial(2 * m)
    return MultiPoly(d, {key: Fraction(sign * v, norm) for key, v in acc.items()})


#####################################################################
# exploratory alpha = 2 analogue of the block-group sum
#####################################################################

def b2_coeff(mu: Partition, v, w) -> Fraction:
    """Spherical-weighted double sum over two block groups of [2k].

    Sums w_mu(sigma * tau) * w_onecolumn(tau) over sigma preserving the
    blocks of v and tau preserving the blocks of w, both weights being
    zonal spherical values at the coset type.  Unlike the alpha = 1
    counterpart this is not always nonnegative; exploratory only.
    """
    v = canonical_blocks(v)
    w = canonical_blocks(w)
    n = sum(len(b) for b in v)
    if n % 2 or sum(mu) * 2 != n:
        raise SizeMismatch("ground set must have size 2|mu|")
    k = n // 2
    wmu = dict((nu, zonal_spherical(mu, nu)) for nu in partitions_of(k))
    wcol = dict((nu, zonal_spherical((1,) * k, nu)) for nu in partitions_of(k))
    total = Fraction()
    for t_img, _ in _block_perms(w):
        wt = wcol[coset_type(t_img)]
        if not wt:
            continue
        for s_img, _ in _block_perms(v):
            total += wmu[coset_type(compose(s_img, t_img))] * wt
    return total


def b2_scan(k: int, unbounded: bool = False):
    """Minimum of `b2_coeff` over partitions of k and block-structure pairs.

    Returns (minimum, witness).  Exploratory; ground sets beyond size 4
    require unbounded=True.
    """
    from .combinatorics import set_partitions_stream

    if k > B2_LIMIT and not unbounded:
        raise LimitExceeded(f"spherical scan for k={k} needs unbounded=True")
    best = None
    witness: tuple = ()
    parts = tuple(set_partitions_stream(2 * k, unbounded))
    for mu in partitions_of(k):
        for v in parts:
            for w in parts:
                val = b2_coeff(mu, v, w)
                if best is None or val < best:
                    best, witness = val, (mu, v, w)
    return best, witness
