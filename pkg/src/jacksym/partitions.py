"""Integer partitions, Young diagrams, and multirectangular coordinates.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ().  Boxes are addressed 1-based as (row, column).  A diagram
given by multirectangular coordinates (p, r) consists, for s = 1..d, of p_s
rows of length q_s = r_s + ... + r_d; zero entries are allowed, so different
coordinate pairs may describe the same diagram.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, NamedTuple

from .exact import AlphaPoly, P_ONE

Partition = tuple[int, ...]


class SizeMismatch(ValueError):
    """Comparison that only makes sense for partitions of equal size."""


class TooManyBlocks(ValueError):
    """The partition has more distinct part sizes than requested blocks."""


class NotContained(ValueError):
    """Skew-shape request where the inner partition is not inside the outer."""


def is_partition(seq) -> bool:
    parts = tuple(seq)
    if any(not isinstance(x, int) or x <= 0 for x in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(seq) -> Partition:
    parts = tuple(seq)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {seq!r}")
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def multiplicity(lam: Partition, part: int) -> int:
    return sum(1 for x in lam if x == part)


def add_ones(lam: Partition, m: int) -> Partition:
    """The partition lam with m extra parts equal to 1."""
    return lam + (1,) * m


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, in reverse lexicographic order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of every size 0..n."""
    for m in range(n + 1):
        yield from partitions_of(m)


def arm(lam: Partition, i: int, j: int) -> int:
    return lam[i - 1] - j


def leg(lam: Partition, i: int, j: int) -> int:
    return conjugate(lam)[j - 1] - i


def boxes(lam: Partition) -> Iterator[tuple[int, int]]:
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield (i, j)


def hook_products(lam: Partition) -> tuple[AlphaPoly, AlphaPoly]:
    """The two alpha-deformed hook products (lower, upper).

    lower: product over boxes of (alpha*arm + leg + 1);
    upper: product over boxes of (alpha*arm + leg + alpha) = (alpha*(arm+1) + leg).
    """
    lo = P_ONE
    hi = P_ONE
    conj = conjugate(lam)
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            a = part - j
            l = conj[j - 1] - i
            lo = lo * AlphaPoly((l + 1, a))
            hi = hi * AlphaPoly((l, a + 1))
    return lo, hi


def contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment: every box of mu is a box of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance: prefix sums of lam weakly exceed those of mu (equal sizes)."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    acc_l = 0
    acc_m = 0
    for k in range(max(len(lam), len(mu))):
        acc_l += lam[k] if k < len(lam) else 0
        acc_m += mu[k] if k < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def refines(nu: Partition, mu: Partition) -> bool:
    """Whether the parts of nu can be grouped to sum to the parts of mu."""
    if sum(nu) != sum(mu):
        raise SizeMismatch(f"|{nu}| != |{mu}|")
    parts = sorted(nu, reverse=True)

    def fill(idx: int, remaining: tuple[int, ...]) -> bool:
        if idx == len(parts):
            return all(x == 0 for x in remaining)
        part = parts[idx]
        seen = set()
        for b, room in enumerate(remaining):
            if room >= part and room not in seen:
                seen.add(room)
                nxt = remaining[:b] + (room - part,) + remaining[b + 1:]
                if fill(idx + 1, tuple(sorted(nxt, reverse=True))):
                    return True
        return False

    return fill(0, tuple(sorted(mu, reverse=True)))


def centralizer_size(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    out = 1
    for part in set(mu):
        m = multiplicity(mu, part)
        out *= part ** m * math.factorial(m)
    return out


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for (i, j) in boxes(lam)]


def syt_number(lam: Partition) -> int:
    """Standard fillings of the diagram, by the hook length formula."""
    n = sum(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return math.factorial(n) // prod


#####################################################################
# multirectangular coordinates
#####################################################################

class MultiRect(NamedTuple):
    """d-block multirectangular coordinates; zeros allowed in both banks."""

    p: tuple[int, ...]
    r: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.p)

    @property
    def q(self) -> tuple[int, ...]:
        # q_s = r_s + ... + r_d
        out = []
        acc = 0
        for x in reversed(self.r):
            acc += x
            out.append(acc)
        return tuple(reversed(out))

    def check(self) -> "MultiRect":
        if len(self.p) != len(self.r):
            raise ValueError("p and r must have equal length")
        if any(x < 0 for x in self.p + self.r):
            raise ValueError("coordinates must be nonnegative")
        return self


def to_partition(m: MultiRect) -> Partition:
    m.check()
    out = []
    for rows, cols in zip(m.p, m.q):
        if cols:
            out.extend([cols] * rows)
    return tuple(out)


def from_partition(lam: Partition, d: int) -> MultiRect:
    """Canonical d-block coordinates of a partition, padding leading zeros."""
    check_partition(lam)
    values: list[int] = []
    mults: list[int] = []
    for part in lam:
        if values and values[-1] == part:
            mults[-1] += 1
        else:
            values.append(part)
            mults.append(1)
    t = len(values)
    if t > d:
        raise TooManyBlocks(f"{lam} needs {t} blocks, only {d} available")
    pad = d - t
    p = (0,) * pad + tuple(mults)
    q = [values[0]] * pad + values if t else [0] * d
    r = [q[s] - (q[s + 1] if s + 1 < d else 0) for s in range(d)]
    return MultiRect(p=tuple(p), r=tuple(r))


def dilate(lam: Partition, s: int) -> Partition:
    """Scale the diagram by s in both directions."""
    if s < 0:
        raise ValueError("negative dilation")
    out = []
    for part in lam:
        out.extend([part * s] * s)
    return tuple(x for x in out if x)


def integer_grid(d: int, bound: int) -> Iterator[MultiRect]:
    """Every coordinate pair with all entries in 0..bound."""
    ranges = [range(bound + 1)] * d
    for p in itertools.product(*ranges):
        for r in itertools.product(*ranges):
            yield MultiRect(p=p, r=r)


@lru_cache(maxsize=None)
def num_partitions(n: int) -> int:
    return sum(1 for _ in partitions_of(n))
