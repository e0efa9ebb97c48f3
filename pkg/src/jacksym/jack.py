"""Jack polynomials in the monomial basis via admissible-tableau counting.

An admissible tableau of shape lam assigns a positive integer to every box
so that, for j > 1, the entry of box (i, j) differs from every entry of
column j-1 strictly above row i, and no value repeats inside a column.
A box with the same entry as its left neighbour is critical and contributes
the factor alpha*(arm+1) + (leg+1); a tableau weighs the product over its
critical boxes.  Summing weights over all admissible tableaux with content
tau gives the coefficient of the monomial m_tau in the Jack polynomial of
shape lam (integral normalization).

The power-sum coefficients, the two diagram functions derived from them,
and the zonal spherical values are all obtained from these expansions by
exact linear algebra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import AlphaPoly, P_ONE, P_ZERO
from .partitions import (
    Partition,
    SizeMismatch,
    add_ones,
    arm,
    centralizer_size,
    check_partition,
    leg,
    multiplicity,
    partitions_of,
    size,
)
from .symfun import _transition_inverse


@lru_cache(maxsize=None)
def jack_monomial_coeff(lam: Partition, tau: Partition) -> AlphaPoly:
    """Coefficient of m_tau in the Jack polynomial of shape lam.

    Depth-first fill in column-major order with a per-column bitmask of
    used values and a per-value budget taken from tau.
    """
    lam = check_partition(lam)
    tau = check_partition(tau)
    if size(lam) != size(tau):
        raise SizeMismatch(f"|{lam}| != |{tau}|")
    if not lam:
        return P_ONE
    nrows = len(lam)
    ncols = lam[0]
    # column-major box list with critical-box factors precomputed
    boxes = []
    for j in range(1, ncols + 1):
        for i in range(1, nrows + 1):
            if lam[i - 1] >= j:
                factor = AlphaPoly((leg(lam, i, j) + 1, arm(lam, i, j) + 1))
                boxes.append((i, j, factor))
    nvals = len(tau)
    budget = list(tau)
    grid = [[0] * (lam[i] + 1) for i in range(nrows)]  # 1-based columns
    total = P_ZERO

    def fill(idx: int, weight: AlphaPoly) -> None:
        nonlocal total
        if idx == len(boxes):
            total = total + weight
            return
        i, j, factor = boxes[idx]
        forbidden = 0
        if j > 1:
            for i2 in range(1, i):
                if lam[i2 - 1] >= j - 1:
                    forbidden |= 1 << grid[i2 - 1][j - 2]
        for i2 in range(1, i):
            if lam[i2 - 1] >= j:
                forbidden |= 1 << grid[i2 - 1][j - 1]
        left = grid[i - 1][j - 2] if j > 1 else 0
        for v in range(1, nvals + 1):
            if budget[v - 1] == 0 or (forbidden >> v) & 1:
                continue
            budget[v - 1] -= 1
            grid[i - 1][j - 1] = v
            fill(idx + 1, weight * factor if v == left else weight)
            grid[i - 1][j - 1] = 0
            budget[v - 1] += 1

    fill(0, P_ONE)
    return total


@lru_cache(maxsize=None)
def jack_monomial_expansion(lam: Partition) -> dict[Partition, AlphaPoly]:
    """All nonzero monomial coefficients of the Jack polynomial of shape lam."""
    lam = check_partition(lam)
    out = {}
    for tau in partitions_of(size(lam)):
        c = jack_monomial_coeff(lam, tau)
        if not c.is_zero():
            out[tau] = c
    return out


@lru_cache(maxsize=None)
def jack_powersum_expansion(lam: Partition) -> dict[Partition, AlphaPoly]:
    """Coefficients of the Jack polynomial of shape lam in the power-sum basis."""
    lam = check_partition(lam)
    n = size(lam)
    index, inv = _transition_inverse(n)
    pos = {mu: i for i, mu in enumerate(index)}
    hatk = jack_monomial_expansion(lam)
    out: dict[Partition, AlphaPoly] = {}
    for nu_idx, nu in enumerate(index):
        acc = P_ZERO
        for mu, c in hatk.items():
            f = inv[pos[mu]][nu_idx]
            if f:
                acc = acc + c * f
        if not acc.is_zero():
            out[nu] = acc
    return out


def jack_powersum_coeff(nu: Partition, lam: Partition) -> AlphaPoly:
    """Coefficient of p_nu in the Jack polynomial of shape lam."""
    nu = check_partition(nu)
    lam = check_partition(lam)
    if size(nu) != size(lam):
        raise SizeMismatch(f"|{nu}| != |{lam}|")
    return jack_powersum_expansion(lam).get(nu, P_ZERO)


def jack_character(mu: Partition, lam: Partition) -> AlphaPoly:
    """Normalized power-sum coefficient of the padded type mu on shape lam.

    Zero when |lam| < |mu|; otherwise the binomial prefactor times the
    centralizer order times the power-sum coefficient at mu padded with
    ones up to |lam|.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    k, n = size(mu), size(lam)
    if n < k:
        return P_ZERO
    m1 = multiplicity(mu, 1)
    pref = math.comb(n - k + m1, m1) * centralizer_size(mu)
    return jack_powersum_coeff(add_ones(mu, n - k), lam) * pref


def jack_kostka(mu: Partition, lam: Partition) -> AlphaPoly:
    """Normalized monomial coefficient of the padded type mu on shape lam.

    Zero when |lam| < |mu|; otherwise the m-coefficient at mu padded with
    ones, divided by (|lam|-|mu|)!.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    k, n = size(mu), size(lam)
    if n < k:
        return P_ZERO
    return jack_monomial_coeff(lam, add_ones(mu, n - k)) * Fraction(1, math.factorial(n - k))


def zonal_spherical(mu: Partition, nu: Partition) -> Fraction:
    """Zonal spherical function value indexed by mu at coset type nu.

    Computed through the alpha=2 power-sum coefficients of the Jack
    polynomial of shape mu.
    """
    mu = check_partition(mu)
    nu = check_partition(nu)
    k = size(mu)
    if k != size(nu):
        raise SizeMismatch(f"|{mu}| != |{nu}|")
    theta2 = jack_powersum_coeff(nu, mu).evaluate(Fraction(2))
    return Fraction(centralizer_size(nu) * 2 ** len(nu), 2 ** k * math.factorial(k)) * theta2
