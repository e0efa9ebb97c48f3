"""Permutation-pair formulas in multirectangular coordinates at alpha = 1.

The building block is the polynomial attached to a pair of permutations:
a sum over pairs of labellings of their cycles by rectangle indices,
subject to an inequality wherever two cycles share an element.  Signed
sums of these blocks over the symmetric group yield the normalized
character, the shifted Schur polynomial and the symmetrized Kostka
polynomial as explicit polynomials in p_1..p_d, r_1..r_d.

The x/y polynomial family (`a_poly`) refines the shifted Schur sum by
the block structure of the two factors; its coefficients in the falling
factorial basis are the nonnegative integers computed by `b_coeff`.
`question_bad_sum` is the analogous signed triple sum with no sign
guarantee; it is exploratory and only enumerated on demand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .combinatorics import (
    LimitExceeded,
    Permutation,
    SetPartition,
    canonical_blocks,
    coarsenings,
    compose,
    consecutive_cycles,
    consecutive_intervals,
    cycle_type,
    cycles,
    finer_or_equal,
    inverse,
    orbit_partition,
    partition_type,
    permutations_stream,
    set_partitions_stream,
    sign,
)
from .exact import MultiPoly
from .partitions import Partition, SizeMismatch, partitions_of, centralizer_size
from .symfun import character

QUESTION_LIMIT = 6


#####################################################################
# the pair polynomial and its two routes
#####################################################################

def _meeting_blocks(s: SetPartition, t: SetPartition) -> tuple[tuple[int, ...], ...]:
    """For each block of s, the indices of the blocks of t it meets."""
    t_sets = [set(b) for b in t]
    return tuple(
        tuple(j for j, tb in enumerate(t_sets) if tb.intersection(b))
        for b in s
    )


def _compatible(v, w, meets) -> bool:
    return all(v[i] <= w[j] for i, js in enumerate(meets) for j in js)


@lru_cache(maxsize=None)
def _prefix_sum_powers(d: int, counts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Monomial expansion of prod_c (p_1 + ... + p_c)^counts[c-1]."""
    acc = {(0,) * d: 1}
    for c, e in enumerate(counts, start=1):
        for _ in range(e):
            nxt: dict[tuple[int, ...], int] = {}
            for key, coeff in acc.items():
                for i in range(c):
                    bumped = key[:i] + (key[i] + 1,) + key[i + 1:]
                    nxt[bumped] = nxt.get(bumped, 0) + coeff
            acc = nxt
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _pair_terms(s: SetPartition, t: SetPartition, d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Exponent/coefficient pairs of the pair polynomial for cycle partitions s, t.

    Sums over labellings w of the t-blocks; for a fixed w each s-block
    independently ranges over p_1 + ... + p_m where m is the smallest
    label among the t-blocks it meets.
    """
    meets = _meeting_blocks(s, t)
    out: dict[tuple[int, ...], int] = {}
    for w in product(range(1, d + 1), repeat=len(t)):
        rexp = [0] * d
        for val in w:
            rexp[val - 1] += 1
        counts = [0] * d
        for js in meets:
            counts[min(w[j] for j in js) - 1] += 1
        rkey = tuple(rexp)
        for pexp, coeff in _prefix_sum_powers(d, tuple(counts)):
            key = pexp + rkey
            out[key] = out.get(key, 0) + coeff
    return tuple(sorted(out.items()))


def n_poly(sigma: Permutation, tau: Permutation, d: int) -> MultiPoly:
    """Sum over compatible labellings of the cycles of sigma and tau.

    A labelling pair (v on the cycles of sigma, w on the cycles of tau)
    is compatible when v <= w on every pair of intersecting cycles; the
    pair contributes prod p_{v(cycle)} prod r_{w(cycle)}.
    """
    if len(sigma) != len(tau):
        raise SizeMismatch("permutations act on different ground sets")
    return MultiPoly(d, dict(_pair_terms(orbit_partition(sigma), orbit_partition(tau), d)))


def n_poly_injective(sigma: Permutation, tau: Permutation, d: int) -> MultiPoly:
    """The pair polynomial assembled from injective labellings.

    Groups the cycles of each permutation into coarser blocks and sums
    over injective compatible labellings of the groups; the exponent of
    each variable is the number of cycles in its group.  Must agree with
    `n_poly`.
    """
    if len(sigma) != len(tau):
        raise SizeMismatch("permutations act on different ground sets")
    s0, t0 = orbit_partition(sigma), orbit_partition(tau)
    out: dict[tuple[int, ...], int] = {}
    for s in coarsenings(s0):
        sexp = tuple(sum(1 for b in s0 if b[0] in set(blk)) for blk in s)
        for t in coarsenings(t0):
            texp = tuple(sum(1 for b in t0 if b[0] in set(blk)) for blk in t)
            meets = _meeting_blocks(s, t)
            for v in permutations(range(1, d + 1), len(s)):
                for w in permutations(range(1, d + 1), len(t)):
                    if not _compatible(v, w, meets):
                        continue
                    key = [0] * (2 * d)
                    for i, e in zip(v, sexp):
                        key[i - 1] += e
                    for j, e in zip(w, texp):
                        key[d + j - 1] += e
                    key = tuple(key)
                    out[key] = out.get(key, 0) + 1
    return MultiPoly(d, out)


#####################################################################
# character, shifted Schur and Kostka polynomials
#####################################################################

def ch1_multirect(mu: Partition, d: int) -> MultiPoly:
    """Normalized character polynomial: signed sum of pair polynomials
    over the factorizations of the canonical permutation of cycle type mu."""
    k = sum(mu)
    pi = consecutive_cycles(mu)
    acc: dict[tuple[int, ...], int] = {}
    for sigma in permutations_stream(k):
        tau = compose(inverse(sigma), pi)
        sgn = sign(tau)
        for key, c in _pair_terms(orbit_partition(sigma), orbit_partition(tau), d):
            acc[key] = acc.get(key, 0) + sgn * c
    return MultiPoly(d, acc)


@lru_cache(maxsize=None)
def _character_row(mu: Partition) -> dict[Partition, int]:
    """Character values of the irreducible labelled mu on every class."""
    return {nu: character(mu, nu) for nu in partitions_of(sum(mu))}


def shifted_schur_multirect(mu: Partition, d: int) -> MultiPoly:
    """Shifted Schur polynomial as a character-weighted double sum of
    pair polynomials, averaged over the symmetric group.

    The double sum is invariant under simultaneous conjugation, so the
    outer factor runs over class representatives with weight 1/z.
    """
    k = sum(mu)
    chi = _character_row(tuple(mu))
    acc: dict[tuple[int, ...], Fraction] = {}
    for nu in partitions_of(k):
        z = centralizer_size(nu)
        rep = consecutive_cycles(nu)
        rep_orbits = orbit_partition(rep)
        inner: dict[tuple[int, ...], int] = {}
        for tau in permutations_stream(k):
            weight = chi[cycle_type(compose(rep, tau))] * sign(tau)
            if not weight:
                continue
            for key, c in _pair_terms(rep_orbits, orbit_partition(tau), d):
                inner[key] = inner.get(key, 0) + weight * c
        for key, c in inner.items():
            acc[key] = acc.get(key, Fraction()) + Fraction(c, z)
    return MultiPoly(d, acc)


def ko_multirect_sym(mu: Partition, d: int, blocks: SetPartition | None = None) -> MultiPoly:
    """Symmetrized Kostka polynomial via the interval-constrained double sum.

    Sums sign(tau) times the pair polynomial over all pairs whose product
    has every cycle inside a block of the target set partition (by
    default consecutive intervals of lengths mu), then divides by the
    sizes of the blocks factorially.  The result does not depend on
    which set partition with block sizes mu is used.
    """
    k = sum(mu)
    target = consecutive_intervals(mu) if blocks is None else canonical_blocks(blocks)
    if partition_type(target) != tuple(sorted(mu, reverse=True)):
        raise SizeMismatch("target blocks do not have sizes mu")
    acc: dict[tuple[int, ...], int] = {}
    perms = tuple(permutations_stream(k))
    for sigma in perms:
        s_orbits = orbit_partition(sigma)
        for tau in perms:
            if not finer_or_equal(orbit_partition(compose(sigma, tau)), target):
                continue
            sgn = sign(tau)
            for key, c in _pair_terms(s_orbits, orbit_partition(tau), d):
                acc[key] = acc.get(key, 0) + sgn * c
    norm = 1
    for part in mu:
        norm *= factorial(part)
    return MultiPoly(d, {key: Fraction(c, norm) for key, c in acc.items()})


#####################################################################
# block-group sums: the x/y family and its falling factorial coefficients
#####################################################################

@lru_cache(maxsize=None)
def _block_perms(s: SetPartition) -> tuple[tuple[Permutation, tuple[int, ...]], ...]:
    """All permutations preserving every block of s, with per-block cycle counts."""
    k = sum(len(b) for b in s)
    per_block = []
    for block in s:
        opts = []
        for image in permutations(block):
            pos = {e: i for i, e in enumerate(block)}
            seen = [False] * len(block)
            ncyc = 0
            for i in range(len(block)):
                if seen[i]:
                    continue
                ncyc += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = pos[image[j]]
            opts.append((tuple(zip(block, image)), ncyc))
        per_block.append(opts)
    out = []
    for combo in product(*per_block):
        img = list(range(1, k + 1))
        counts = []
        for assignment, ncyc in combo:
            for src, dst in assignment:
                img[src - 1] = dst
            counts.append(ncyc)
        out.append((tuple(img), tuple(counts)))
    return tuple(out)


@lru_cache(maxsize=None)
def _signed_product_orbits(s: SetPartition, t: SetPartition) -> tuple[tuple[SetPartition, int], ...]:
    """Signed census of the cycle partitions of sigma*tau.

    sigma runs over the block group of s, tau over the block group of t,
    each product weighted by sign(tau); entries with weight zero are dropped.
    """
    k = sum(len(b) for b in s)
    dist: dict[SetPartition, int] = {}
    for t_img, t_cyc in _block_perms(t):
        eps = -1 if (k - sum(t_cyc)) % 2 else 1
        for s_img, _ in _block_perms(s):
            sp = orbit_partition(compose(s_img, t_img))
            dist[sp] = dist.get(sp, 0) + eps
    return tuple(sorted((sp, wt) for sp, wt in dist.items() if wt))


def a_poly(mu: Partition, s, t) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """Character-weighted signed sum over the two block groups, graded by
    per-block cycle counts.

    Returns the polynomial in x_1..x_s, y_1..y_t as a dict mapping
    (x-exponents, y-exponents) to integer coefficients: the exponent of
    x_i is the number of cycles of the first factor inside block i, and
    likewise for y_j and the second factor.
    """
    s = canonical_blocks(s)
    t = canonical_blocks(t)
    k = sum(len(b) for b in s)
    if sum(mu) != k:
        raise SizeMismatch("partition size differs from the ground set")
    chi = _character_row(tuple(mu))
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for t_img, t_cyc in _block_perms(t):
        eps = -1 if (k - sum(t_cyc)) % 2 else 1
        for s_img, s_cyc in _block_perms(s):
            c = eps * chi[cycle_type(compose(s_img, t_img))]
            if c:
                key = (s_cyc, t_cyc)
                out[key] = out.get(key, 0) + c
    return {key: c for key, c in out.items() if c}


def b_coeff(mu: Partition, s, t) -> int:
    """Character-weighted signed sum over the two block groups.

    Nonnegative for every partition and every pair of block structures;
    these integers are the falling factorial coefficients of `a_poly`.
    """
    s = canonical_blocks(s)
    t = canonical_blocks(t)
    if sum(mu) != sum(len(b) for b in s):
        raise SizeMismatch("partition size differs from the ground set")
    chi = _character_row(tuple(mu))
    return sum(wt * chi[partition_type(sp)] for sp, wt in _signed_product_orbits(s, t))


def _refinements(s: SetPartition):
    """All set partitions finer than or equal to s."""
    per_block = []
    for block in s:
        local = []
        for grouping in set_partitions_stream(len(block)):
            local.append(tuple(tuple(block[i - 1] for i in g) for g in grouping))
        per_block.append(local)
    for combo in product(*per_block):
        yield canonical_blocks(b for part in combo for b in part)


def a_poly_ff(mu: Partition, s, t) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """Falling factorial coefficients of `a_poly` computed from `b_coeff`.

    The coefficient of prod (x_i)_{a_i} (y_j)_{b_j} is the sum of
    `b_coeff` over pairs of refinements of s and t that split block i of
    s into a_i pieces and block j of t into b_j pieces.
    """
    s = canonical_blocks(s)
    t = canonical_blocks(t)
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for fine_s in _refinements(s):
        aexp = tuple(sum(1 for b in fine_s if b[0] in set(blk)) for blk in s)
        for fine_t in _refinements(t):
            bexp = tuple(sum(1 for b in fine_t if b[0] in set(blk)) for blk in t)
            val = b_coeff(mu, fine_s, fine_t)
            if val:
                key = (aexp, bexp)
                out[key] = out.get(key, 0) + val
    return {key: c for key, c in out.items() if c}


def shifted_schur_via_a(mu: Partition, d: int) -> MultiPoly:
    """Shifted Schur polynomial reassembled from the x/y family.

    Averages, over all pairs of block structures, the evaluations of
    `a_poly` at injectively and compatibly labelled p and r variables.
    Must agree with `shifted_schur_multirect`.
    """
    k = sum(mu)
    acc: dict[tuple[int, ...], int] = {}
    for s in set_partitions_stream(k):
        for t in set_partitions_stream(k):
            poly = a_poly(mu, s, t)
            if not poly:
                continue
            meets = _meeting_blocks(s, t)
            for v in permutations(range(1, d + 1), len(s)):
                for w in permutations(range(1, d + 1), len(t)):
                    if not _compatible(v, w, meets):
                        continue
                    for (xe, ye), c in poly.items():
                        key = [0] * (2 * d)
                        for i, e in zip(v, xe):
                            key[i - 1] += e
                        for j, e in zip(w, ye):
                            key[d + j - 1] += e
                        key = tuple(key)
                        acc[key] = acc.get(key, 0) + c
    norm = factorial(k)
    return MultiPoly(d, {key: Fraction(c, norm) for key, c in acc.items()})


#####################################################################
# signed coordinates and the rectangle census
#####################################################################

def stanley_signed_coeffs(poly: MultiPoly) -> dict[tuple[int, ...], Fraction]:
    """Coefficients of the polynomial rewritten in p_1..p_d and the
    negated suffix sums s_i = -(r_i + ... + r_d).

    Keys are exponent tuples, p-exponents first and then s-exponents.
    """
    d = poly.d
    out: dict[tuple[int, ...], Fraction] = {}
    for key, coeff in poly.terms.items():
        c = coeff.num.const_value() / coeff.den.const_value()
        sdict: dict[tuple[int, ...], Fraction] = {(0,) * d: c}
        # substitute r_i = s_{i+1} - s_i, with s_{d+1} = 0
        for i in range(d):
            for _ in range(key[d + i]):
                nxt: dict[tuple[int, ...], Fraction] = {}
                for sk, sc in sdict.items():
                    down = sk[:i] + (sk[i] + 1,) + sk[i + 1:]
                    nxt[down] = nxt.get(down, Fraction()) - sc
                    if i + 1 < d:
                        up = sk[:i + 1] + (sk[i + 1] + 1,) + sk[i + 2:]
                        nxt[up] = nxt.get(up, Fraction()) + sc
                sdict = nxt
        pkey = key[:d]
        for sk, sc in sdict.items():
            full = pkey + sk
            out[full] = out.get(full, Fraction()) + sc
    return {key: c for key, c in out.items() if c}


def rectangle_factorization_counts(mu: Partition) -> dict[tuple[int, int], int]:
    """Census of the factorizations of the canonical permutation of cycle
    type mu, keyed by the cycle counts of the two factors."""
    k = sum(mu)
    pi = consecutive_cycles(mu)
    out: dict[tuple[int, int], int] = {}
    for sigma in permutations_stream(k):
        tau = compose(inverse(sigma), pi)
        key = (len(cycles(sigma)), len(cycles(tau)))
        out[key] = out.get(key, 0) + 1
    return out


#####################################################################
# the signed triple sum
#####################################################################

def question_bad_sum(s, t, u) -> int:
    """Signed count of block-group pairs whose product preserves u.

    Sums sign(tau) over sigma in the block group of s and tau in the
    block group of t such that every cycle of sigma*tau stays inside a
    block of u.  No sign guarantee.
    """
    s = canonical_blocks(s)
    t = canonical_blocks(t)
    u = canonical_blocks(u)
    return sum(wt for sp, wt in _signed_product_orbits(s, t) if finer_or_equal(sp, u))


def question_scan(k: int, unbounded: bool = False) -> tuple[int, tuple]:
    """Minimum of the signed triple sum over all block-structure triples.

    Returns the minimum value and a witness triple.  Ground sets of size
    7 and up are a stress run and require unbounded=True.
    """
    if k > QUESTION_LIMIT and not unbounded:
        raise LimitExceeded(f"triple scan for k={k} needs unbounded=True")
    best = None
    witness: tuple = ()
    parts = tuple(set_partitions_stream(k, unbounded))
    for s in parts:
        for t in parts:
            census = _signed_product_orbits(s, t)
            for u in parts:
                val = sum(wt for sp, wt in census if finer_or_equal(sp, u))
                if best is None or val < best:
                    best, witness = val, (s, t, u)
    return best, witness
