"""Permutations, set partitions, and pair partitions of small ground sets.

Permutations of [k] are tuples of 1-based images.  Set partitions are stored
canonically as a tuple of blocks, each block a sorted tuple, blocks sorted by
their minimum; this makes them usable as dict keys.  Pair partitions (perfect
matchings of [2k]) are set partitions whose blocks all have size two.

Enumeration streams are guarded: asking for a ground set beyond the declared
bound raises LimitExceeded unless the caller passes unbounded=True.  The
bounds keep accidental factorial blowups out of library code paths.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import AlphaPoly
from .partitions import Partition

Permutation = tuple[int, ...]
SetPartition = tuple[tuple[int, ...], ...]

PERMUTATION_LIMIT = 9
SET_PARTITION_LIMIT = 12
PAIR_PARTITION_LIMIT = 8


class LimitExceeded(ValueError):
    """Enumeration request beyond the declared safety bound."""


def _check_limit(kind: str, k: int, limit: int, unbounded: bool) -> None:
    if k > limit and not unbounded:
        raise LimitExceeded(f"{kind} of size {k} exceeds bound {limit}; "
                            "pass unbounded=True to override")


#####################################################################
# permutations
#####################################################################

def identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """(s t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, v in enumerate(s, start=1):
        out[v - 1] = i
    return tuple(out)


def cycles(s: Permutation) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum."""
    seen = [False] * len(s)
    out = []
    for start in range(1, len(s) + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        nxt = s[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt - 1] = True
            nxt = s[nxt - 1]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(s: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(s)), reverse=True))


def sign(s: Permutation) -> int:
    return -1 if (len(s) - len(cycles(s))) % 2 else 1


def from_cycles(k: int, cycs: Sequence[Sequence[int]]) -> Permutation:
    out = list(range(1, k + 1))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
            out[a - 1] = b
    return tuple(out)


def consecutive_cycles(mu: Partition) -> Permutation:
    """The canonical permutation of [|mu|] whose i-th cycle is the i-th
    consecutive interval of length mu_i."""
    k = sum(mu)
    cycs = []
    at = 1
    for part in mu:
        cycs.append(tuple(range(at, at + part)))
        at += part
    return from_cycles(k, cycs)


def orbit_partition(s: Permutation) -> SetPartition:
    return canonical_blocks(cycles(s))


def permutations_stream(k: int, unbounded: bool = False) -> Iterator[Permutation]:
    """All k! permutations in lexicographic order of their image tuples."""
    _check_limit("permutation ground set", k, PERMUTATION_LIMIT, unbounded)
    return iter(itertools.permutations(range(1, k + 1)))


#####################################################################
# set partitions
#####################################################################

def canonical_blocks(blocks) -> SetPartition:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def singletons(k: int) -> SetPartition:
    return tuple((i,) for i in range(1, k + 1))


def one_block(k: int) -> SetPartition:
    return (tuple(range(1, k + 1)),) if k else ()


def consecutive_intervals(mu: Partition) -> SetPartition:
    """Blocks {1..mu_1}, {mu_1+1..mu_1+mu_2}, ..."""
    out = []
    at = 1
    for part in mu:
        out.append(tuple(range(at, at + part)))
        at += part
    return tuple(out)


def set_partitions_stream(k: int, unbounded: bool = False) -> Iterator[SetPartition]:
    """All Bell(k) set partitions of [k].

    Deterministic order: element k is appended to each block of a partition
    of [k-1] in turn, then opens a new block.
    """
    _check_limit("set partition ground set", k, SET_PARTITION_LIMIT, unbounded)

    def rec(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if n == 0:
            yield ()
            return
        for smaller in rec(n - 1):
            for i in range(len(smaller)):
                yield smaller[:i] + (smaller[i] + (n,),) + smaller[i + 1:]
            yield smaller + ((n,),)

    return rec(k)


def block_of(sp: SetPartition, x: int) -> tuple[int, ...]:
    for b in sp:
        if x in b:
            return b
    raise KeyError(x)


def block_index_map(sp: SetPartition) -> dict[int, int]:
    out = {}
    for i, b in enumerate(sp):
        for x in b:
            out[x] = i
    return out


def join(s: SetPartition, t: SetPartition) -> SetPartition:
    """Finest common coarsening (transitive closure of the union relation)."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for sp in (s, t):
        for b in sp:
            for x in b:
                parent.setdefault(x, x)
            for x in b[1:]:
                union(b[0], x)
    groups: dict[int, list[int]] = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return canonical_blocks(groups.values())


def finer_or_equal(s: SetPartition, t: SetPartition) -> bool:
    """Every block of s is contained in a block of t."""
    where = block_index_map(t)
    return all(len({where[x] for x in b}) == 1 for b in s)


def coarsenings(s: SetPartition, unbounded: bool = False) -> Iterator[SetPartition]:
    """All set partitions coarser than or equal to s."""
    k = len(s)
    for grouping in set_partitions_stream(k, unbounded):
        yield canonical_blocks(
            tuple(sorted(x for i in g for x in s[i - 1])) for g in grouping
        )


def partition_type(sp: SetPartition) -> Partition:
    return tuple(sorted((len(b) for b in sp), reverse=True))


#####################################################################
# pair partitions
#####################################################################

def star_matching(k: int) -> SetPartition:
    """{{1,2},{3,4},...,{2k-1,2k}}."""
    return tuple((2 * i + 1, 2 * i + 2) for i in range(k))


def pair_partitions_stream(k: int, unbounded: bool = False) -> Iterator[SetPartition]:
    """All (2k-1)!! perfect matchings of [2k].

    Deterministic order: the smallest free element is paired with each larger
    free element in increasing order.
    """
    _check_limit("pair partition ground set", k, PAIR_PARTITION_LIMIT, unbounded)

    def rec(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not free:
            yield ()
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rest = free[1:idx] + free[idx + 1:]
            for sub in rec(rest):
                yield ((a, b),) + sub
        return

    return rec(tuple(range(1, 2 * k + 1)))


def type_of_pair(s1: SetPartition, s2: SetPartition) -> Partition:
    """Half the block sizes of join(s1, s2), sorted; defined for matchings."""
    j = join(s1, s2)
    sizes = []
    for b in j:
        if len(b) % 2:
            raise ValueError("join of two matchings must have even blocks")
        sizes.append(len(b) // 2)
    return tuple(sorted(sizes, reverse=True))


def matching_image(s: Permutation, m: SetPartition) -> SetPartition:
    """Apply a permutation of the ground set to every pair of a matching."""
    return canonical_blocks(tuple(s[x - 1] for x in b) for b in m)


def coset_type(s: Permutation) -> Partition:
    """Type of the pair (star matching, its image under s); s acts on [2k]."""
    if len(s) % 2:
        raise ValueError("coset type needs a permutation of an even ground set")
    k = len(s) // 2
    star = star_matching(k)
    return type_of_pair(star, matching_image(s, star))


def hyperoctahedral_order(k: int) -> int:
    out = 1
    for i in range(1, k + 1):
        out *= 2 * i
    return out


#####################################################################
# left-to-right minima
#####################################################################

def lrmin(word: Sequence[int]) -> int:
    """Number of left-to-right minima of a word with distinct entries."""
    count = 0
    cur = None
    for x in word:
        if cur is None or x < cur:
            count += 1
            cur = x
    return count


@lru_cache(maxsize=None)
def lrmin_generating(j: int) -> AlphaPoly:
    """Sum of t^lrmin over all permutations of [j]: t(t+1)...(t+j-1)."""
    out = AlphaPoly((0, 1)) if j else AlphaPoly((1,))
    for i in range(1, j):
        out = out * AlphaPoly((i, 1))
    return out
