"""Classical symmetric-function data over exact rationals.

The module provides the transition coefficients between the power-sum and
monomial bases, Kostka numbers by exhaustive semistandard tableau
enumeration, standard tableau counts of skew shapes by box addition, and
symmetric group character values by border-strip recursion.

Expansions are homogeneous: a BasisExpansion maps partitions of one common
size to coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import AlphaFraction, F_ONE
from .partitions import (
    NotContained,
    Partition,
    SizeMismatch,
    check_partition,
    contains,
    partitions_of,
    size,
)


class BasisExpansion:
    """Coefficients of a homogeneous element in a named basis.

    basis is "monomial" or "powersum"; coeffs maps partitions of one common
    size to nonzero AlphaFraction values (zero entries are dropped).
    """

    __slots__ = ("basis", "coeffs")

    BASES = ("monomial", "powersum")

    def __init__(self, basis: str, coeffs):
        if basis not in self.BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Partition, AlphaFraction] = {}
        deg = None
        for lam, c in dict(coeffs).items():
            lam = check_partition(lam)
            if deg is None:
                deg = size(lam)
            elif size(lam) != deg:
                raise SizeMismatch("mixed degrees in one expansion")
            if not isinstance(c, AlphaFraction):
                c = AlphaFraction(c)
            if c:
                clean[lam] = c
        self.basis = basis
        self.coeffs = clean

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __getitem__(self, lam: Partition) -> AlphaFraction:
        return self.coeffs.get(tuple(lam), AlphaFraction(0))

    def __repr__(self):
        inner = ", ".join(f"{lam}: {c!r}" for lam, c in sorted(self.coeffs.items()))
        return f"BasisExpansion({self.basis!r}, {{{inner}}})"


def _require_equal_size(a: Partition, b: Partition) -> None:
    if size(a) != size(b):
        raise SizeMismatch(f"|{a}| != |{b}|")


#####################################################################
# power sums vs monomials
#####################################################################

@lru_cache(maxsize=None)
def powersum_monomial_coeff(nu: Partition, mu: Partition) -> int:
    """Coefficient of the monomial m_mu in the power sum p_nu.

    Counts functions from the parts of nu (as distinguishable cycle slots)
    onto the positions of mu such that the parts mapped to position i sum
    to mu_i.
    """
    nu = check_partition(nu)
    mu = check_partition(mu)
    _require_equal_size(nu, mu)
    sizes = sorted(set(nu))
    counts = tuple(sum(1 for x in nu if x == s) for s in sizes)

    @lru_cache(maxsize=None)
    def sub_choices(target: int, idx: int):
        # vectors (a_idx, ..., a_last) with sum a_i*sizes[i] = target
        if idx == len(sizes):
            return ((),) if target == 0 else ()
        out = []
        for a in range(min(counts[idx], target // sizes[idx]) + 1):
            for rest in sub_choices(target - a * sizes[idx], idx + 1):
                out.append((a,) + rest)
        return tuple(out)

    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def fill(pos: int, remaining: tuple[int, ...]) -> int:
        if pos == len(mu):
            return 1
        key = (pos, remaining)
        if key in memo:
            return memo[key]
        total = 0
        for choice in sub_choices(mu[pos], 0):
            if all(a <= r for a, r in zip(choice, remaining)):
                ways = 1
                for a, r in zip(choice, remaining):
                    ways *= math.comb(r, a)
                nxt = tuple(r - a for a, r in zip(choice, remaining))
                total += ways * fill(pos + 1, nxt)
        memo[key] = total
        return total

    return fill(0, counts)


def powersum_to_monomial(nu: Partition) -> BasisExpansion:
    """Expand p_nu in the monomial basis."""
    nu = check_partition(nu)
    out = {}
    for mu in partitions_of(size(nu)):
        c = powersum_monomial_coeff(nu, mu)
        if c:
            out[mu] = c
    return BasisExpansion("monomial", out)


@lru_cache(maxsize=None)
def _transition_inverse(k: int) -> tuple[tuple[Partition, ...], tuple[tuple[Fraction, ...], ...]]:
    """Partitions of k and the inverse of the power-sum/monomial matrix.

    Row nu, column mu of the forward matrix is powersum_monomial_coeff; the
    returned matrix I satisfies m_mu = sum_nu I[mu][nu] p_nu.
    """
    index = tuple(partitions_of(k))
    n = len(index)
    fwd = [[Fraction(powersum_monomial_coeff(nu, mu)) for mu in index] for nu in index]
    # invert by Gauss-Jordan; the matrix is invertible (triangular wrt refinement)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(fwd)]
    for t in range(n):
        piv = next(i for i in range(t, n) if aug[i][t])
        aug[t], aug[piv] = aug[piv], aug[t]
        inv = 1 / aug[t][t]
        aug[t] = [c * inv for c in aug[t]]
        for i in range(n):
            if i != t and aug[i][t]:
                f = aug[i][t]
                aug[i] = [c - f * ct for c, ct in zip(aug[i], aug[t])]
    # inverse of fwd maps p-coefficient vectors to m-coefficient vectors;
    # rearrange so that entry [mu][nu] expresses m_mu in the p basis
    invm = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    # fwd[nu][mu]: p_nu = sum_mu fwd[nu][mu] m_mu, so m = fwd^{-1} applied on
    # the basis-element column vector: m_mu = sum_nu (fwd^{-1})[mu][nu] p_nu
    return index, tuple(tuple(row) for row in invm)


def monomial_to_powersum(e: BasisExpansion) -> BasisExpansion:
    """Rewrite a monomial-basis expansion in the power-sum basis."""
    if e.basis != "monomial":
        raise ValueError("expected a monomial-basis expansion")
    if not e.coeffs:
        return BasisExpansion("powersum", {})
    k = size(next(iter(e.coeffs)))
    index, inv = _transition_inverse(k)
    pos = {lam: i for i, lam in enumerate(index)}
    out: dict[Partition, AlphaFraction] = {}
    for mu, c in e.coeffs.items():
        row = inv[pos[mu]]
        for j, nu in enumerate(index):
            if row[j]:
                term = c * AlphaFraction(row[j])
                prev = out.get(nu)
                out[nu] = term if prev is None else prev + term
    return BasisExpansion("powersum", out)


def powersum_to_monomial_expansion(e: BasisExpansion) -> BasisExpansion:
    """Rewrite a power-sum-basis expansion in the monomial basis."""
    if e.basis != "powersum":
        raise ValueError("expected a powersum-basis expansion")
    out: dict[Partition, AlphaFraction] = {}
    for nu, c in e.coeffs.items():
        for mu in partitions_of(size(nu)):
            l = powersum_monomial_coeff(nu, mu)
            if l:
                term = c * AlphaFraction(l)
                prev = out.get(mu)
                out[mu] = term if prev is None else prev + term
    return BasisExpansion("monomial", out)


#####################################################################
# Kostka numbers
#####################################################################

@lru_cache(maxsize=None)
def kostka(lam: Partition, tau: Partition) -> int:
    """Number of semistandard tableaux of shape lam and type tau.

    Exhaustive row-by-row enumeration; rows weakly increase, columns
    strictly increase, entry i appears tau_i times.
    """
    lam = check_partition(lam)
    tau = check_partition(tau)
    _require_equal_size(lam, tau)
    if not lam:
        return 1
    nvals = len(tau)

    def fill_row(row: int, col: int, prev_row: tuple[int, ...],
                 cur_row: tuple[int, ...], remaining: tuple[int, ...]) -> int:
        width = lam[row]
        if col == width:
            if row + 1 == len(lam):
                return 1
            return fill_row(row + 1, 0, cur_row, (), remaining)
        lo = cur_row[col - 1] if col else 1
        if row and col < len(prev_row):
            lo = max(lo, prev_row[col] + 1)
        total = 0
        for v in range(lo, nvals + 1):
            if remaining[v - 1]:
                nxt = remaining[:v - 1] + (remaining[v - 1] - 1,) + remaining[v:]
                total += fill_row(row, col + 1, prev_row, cur_row + (v,), nxt)
        return total

    return fill_row(0, 0, (), (), tau)


#####################################################################
# standard tableaux of skew shapes
#####################################################################

@lru_cache(maxsize=None)
def syt_count(lam: Partition, mu: Partition = ()) -> int:
    """Number of standard tableaux of the skew shape lam/mu.

    Counts maximal box-addition chains from mu to lam in the lattice of
    partitions contained in lam.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")

    memo: dict[Partition, int] = {}

    def grow(cur: Partition) -> int:
        if cur == lam:
            return 1
        if cur in memo:
            return memo[cur]
        total = 0
        padded = cur + (0,) * (len(lam) - len(cur))
        for i in range(len(lam)):
            if padded[i] < lam[i] and (i == 0 or padded[i - 1] > padded[i]):
                nxt = padded[:i] + (padded[i] + 1,) + padded[i + 1:]
                total += grow(tuple(x for x in nxt if x))
        memo[cur] = total
        return total

    return grow(mu)


#####################################################################
# symmetric group characters
#####################################################################

def _strip_removals(lam: Partition, t: int) -> list[tuple[Partition, int]]:
    """Shapes obtainable by removing one border strip of size t, with signs."""
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - t
        if nb >= 0 and nb not in bset:
            height = sum(1 for c in beta if nb < c < b)
            newbeta = sorted((bset - {b}) | {nb}, reverse=True)
            newlam = tuple(newbeta[j] - (n - 1 - j) for j in range(n))
            out.append((tuple(x for x in newlam if x), -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def character(lam: Partition, tau: Partition) -> int:
    """Irreducible character of the symmetric group, shape lam at class tau.

    Border-strip recursion on the largest part of tau.
    """
    lam = check_partition(lam)
    tau = check_partition(tau)
    _require_equal_size(lam, tau)
    if not lam:
        return 1
    t, rest = tau[0], tau[1:]
    return sum(sgn * character(sub, rest) for sub, sgn in _strip_removals(lam, t))


def schur_to_monomial(lam: Partition) -> BasisExpansion:
    """Expand the Schur function of shape lam in monomials via characters.

    Used as a cross-check: the coefficients must be the Kostka numbers.
    """
    lam = check_partition(lam)
    from .partitions import centralizer_size

    acc: dict[Partition, Fraction] = {}
    for tau in partitions_of(size(lam)):
        chi = character(lam, tau)
        if not chi:
            continue
        ztau = centralizer_size(tau)
        for mu in partitions_of(size(lam)):
            l = powersum_monomial_coeff(tau, mu)
            if l:
                acc[mu] = acc.get(mu, Fraction(0)) + Fraction(chi * l, ztau)
    return BasisExpansion("monomial", {mu: AlphaFraction(c) for mu, c in acc.items() if c})


#####################################################################
# table dumps (CLI support)
#####################################################################

TABLE_LIMIT = 8


def character_table(n: int) -> tuple[tuple[Partition, ...], list[list[int]]]:
    """Partitions of n and the full character table, rows shapes, columns classes."""
    from .combinatorics import LimitExceeded

    if n > TABLE_LIMIT:
        raise LimitExceeded(f"table size {n} exceeds bound {TABLE_LIMIT}")
    index = tuple(partitions_of(n))
    return index, [[character(lam, tau) for tau in index] for lam in index]


def kostka_table(n: int) -> tuple[tuple[Partition, ...], list[list[int]]]:
    """Partitions of n and the Kostka matrix, rows shapes, columns types."""
    from .combinatorics import LimitExceeded

    if n > TABLE_LIMIT:
        raise LimitExceeded(f"table size {n} exceeds bound {TABLE_LIMIT}")
    index = tuple(partitions_of(n))
    return index, [[kostka(lam, tau) for tau in index] for lam in index]
