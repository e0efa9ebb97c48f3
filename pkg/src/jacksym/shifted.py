"""Shifted symmetric machinery over the alpha-deformed power sums.

The building block is the deformed shifted power sum

    p*_k(lam) = sum_i [(alpha*lam_i - i + 1/2)^k - (-i + 1/2)^k],

a polynomial in alpha for every partition.  Any diagram function of degree
at most k is expanded over the products p*_nu, |nu| <= k (the empty
partition contributing the constant), by solving one exact square linear
system; composing with the blockwise multirectangular form of p*_k turns
the expansion into a polynomial in the block coordinates p_1..p_d,
r_1..r_d.

The module also evaluates shifted Schur functions by their falling
factorial determinant ratio and shifted Jack functions through the Jack
character data.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exact import (
    ALPHA,
    AlphaFraction,
    AlphaPoly,
    F_ONE,
    F_ZERO,
    MultiPoly,
    P_ONE,
    P_ZERO,
    falling_factorial,
    faulhaber,
    poly_gcd,
    solve_fraction_system,
    solve_poly_system,
)
from .jack import jack_character, jack_kostka, jack_powersum_expansion
from .partitions import (
    Partition,
    check_partition,
    contains,
    partitions_of,
    size,
)
from .symfun import kostka


class PoleEncountered(ZeroDivisionError):
    """Evaluation of the corner quotient at its removable-singularity-free pole."""


class DegreeGuardFailed(ArithmeticError):
    """An expansion fails to reproduce its function one or two degrees up."""


class DenominatorNotCleared(ArithmeticError):
    """A reconstruction left a nontrivial alpha-denominator behind."""


#####################################################################
# shifted power sums and the corner quotient
#####################################################################

@lru_cache(maxsize=None)
def shifted_powersum(k: int, lam: Partition) -> AlphaFraction:
    """The degree-k shifted power sum evaluated on a partition."""
    if k < 1:
        raise ValueError("degree must be positive")
    lam = check_partition(lam)
    acc = P_ZERO
    for i, part in enumerate(lam, start=1):
        shift = AlphaPoly.const(Fraction(1 - 2 * i, 2))
        acc = acc + (ALPHA * part + shift) ** k - shift ** k
    return AlphaFraction(acc)


def corner_quotient(lam: Partition, z: Fraction) -> AlphaFraction:
    """The row-product quotient whose log expansion generates the corner sums.

    For an l-row partition this is z/(z+l) times the product over rows of
    (z - alpha*lam_i + i)/(z - alpha*lam_i + i - 1).  The only pole in z
    that does not cancel for generic alpha is z = -l.
    """
    lam = check_partition(lam)
    z = Fraction(z)
    ell = len(lam)
    if ell == 0:
        return F_ONE
    if z == -ell:
        raise PoleEncountered(f"z = -{ell} is a pole for an {ell}-row partition")
    num = AlphaPoly.const(z)
    den = AlphaPoly.const(z + ell)
    for i, part in enumerate(lam, start=1):
        num = num * (AlphaPoly.const(z + i) - ALPHA * part)
        den = den * (AlphaPoly.const(z + i - 1) - ALPHA * part)
    return AlphaFraction(num, den)


@lru_cache(maxsize=None)
def corner_powersum(k: int, lam: Partition) -> AlphaFraction:
    """k times the z^{-k} coefficient of log of the corner quotient at infinity.

    Each factor (z+u)/z contributes (-1)^{k+1} u^k / k to that coefficient,
    so the whole value assembles from the row shifts a_i = i - alpha*lam_i:

        (-1)^{k+1} * [ sum_i (a_i^k - (a_i - 1)^k) - l^k ].

    Degree 1 gives 0 identically.
    """
    if k < 1:
        raise ValueError("degree must be positive")
    lam = check_partition(lam)
    ell = len(lam)
    acc = AlphaPoly.const(-(ell ** k))
    for i, part in enumerate(lam, start=1):
        a = AlphaPoly.const(i) - ALPHA * part
        acc = acc + a ** k - (a - P_ONE) ** k
    if k % 2 == 0:
        acc = -acc
    return AlphaFraction(acc)


#####################################################################
# diagram functions and p* expansions
#####################################################################

@dataclass(frozen=True)
class DiagramFunction:
    """An evaluation procedure on partitions with a declared degree bound."""

    name: str
    degree: int
    func: Callable[[Partition], AlphaFraction]

    def __call__(self, lam: Partition) -> AlphaFraction:
        v = self.func(tuple(lam))
        return v if isinstance(v, AlphaFraction) else AlphaFraction(v)


@lru_cache(maxsize=None)
def _pstar_product(nu: Partition, lam: Partition) -> AlphaPoly:
    out = P_ONE
    for part in nu:
        out = out * shifted_powersum(part, lam).as_poly()
    return out


class PStarExpansion:
    """Coefficients over the p* products of all partitions of size <= degree."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        self.degree = degree
        clean: dict[Partition, AlphaFraction] = {}
        for nu, c in dict(coeffs).items():
            nu = check_partition(nu)
            if size(nu) > degree:
                raise ValueError(f"index {nu} exceeds degree bound {degree}")
            if not isinstance(c, AlphaFraction):
                c = AlphaFraction(c)
            if c:
                clean[nu] = c
        self.coeffs = clean

    def __getitem__(self, nu: Partition) -> AlphaFraction:
        return self.coeffs.get(tuple(nu), F_ZERO)

    def __eq__(self, other):
        if not isinstance(other, PStarExpansion):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def evaluate(self, lam: Partition, alpha: Fraction | None = None) -> AlphaFraction:
        lam = check_partition(lam)
        if alpha is not None:
            total = Fraction()
            for nu, c in self.coeffs.items():
                total += c.evaluate(alpha) * _pstar_product(nu, lam).evaluate(alpha)
            return AlphaFraction.const(total)
        acc = F_ZERO
        for nu, c in self.coeffs.items():
            acc = acc + c * _pstar_product(nu, lam)
        return acc

    def __repr__(self):
        inner = ", ".join(f"{nu}: {c!r}" for nu, c in sorted(self.coeffs.items()))
        return f"PStarExpansion({self.degree}, {{{inner}}})"


@lru_cache(maxsize=None)
def _basis_index(k: int) -> tuple[Partition, ...]:
    out: list[Partition] = []
    for j in range(k + 1):
        out.extend(partitions_of(j))
    return tuple(out)


@lru_cache(maxsize=None)
def _pstar_matrix(k: int) -> tuple[tuple[AlphaPoly, ...], ...]:
    index = _basis_index(k)
    return tuple(tuple(_pstar_product(nu, lam) for nu in index) for lam in index)


def _poly_lcm(a: AlphaPoly, b: AlphaPoly) -> AlphaPoly:
    if a == P_ONE:
        return b
    if b == P_ONE:
        return a
    return a.divexact(poly_gcd(a, b)) * b


def _expand_raw(funcs: Sequence[DiagramFunction], k: int):
    """Shared solve: returns (index, X, D, per-column extra denominators).

    Column c of the solution is X[.][c] / (D * dens[c]).
    """
    for f in funcs:
        if f.degree > k:
            raise ValueError(f"{f.name} declares degree {f.degree} > bound {k}")
    index = _basis_index(k)
    A = [list(row) for row in _pstar_matrix(k)]
    dens: list[AlphaPoly] = []
    cols: list[list[AlphaPoly]] = []
    for f in funcs:
        vals = [f(lam) for lam in index]
        den = P_ONE
        for v in vals:
            den = _poly_lcm(den, v.den)
        col = []
        for v in vals:
            col.append((v * den).as_poly())
        dens.append(den)
        cols.append(col)
    B = [[cols[c][i] for c in range(len(funcs))] for i in range(len(index))]
    X, D = solve_poly_system(A, B)
    return index, X, D, dens


def _guard(funcs: Sequence[DiagramFunction], expansions: Sequence[PStarExpansion],
           k: int, alpha: Fraction | None = None) -> None:
    for extra in (k + 1, k + 2):
        for lam in partitions_of(extra):
            for f, e in zip(funcs, expansions):
                want = f(lam) if alpha is None else AlphaFraction.const(f(lam).evaluate(alpha))
                if e.evaluate(lam, alpha) != want:
                    raise DegreeGuardFailed(
                        f"{f.name}: expansion at degree {k} diverges on {lam}")


def _expand_raw_at(funcs: Sequence[DiagramFunction], k: int, alpha: Fraction):
    """Numeric variant of _expand_raw with alpha fixed to a rational."""
    for f in funcs:
        if f.degree > k:
            raise ValueError(f"{f.name} declares degree {f.degree} > bound {k}")
    index = _basis_index(k)
    A = [[entry.evaluate(alpha) for entry in row] for row in _pstar_matrix(k)]
    B = [[f(lam).evaluate(alpha) for f in funcs] for lam in index]
    return index, solve_fraction_system(A, B)


def expand_many_in_pstar(funcs: Sequence[DiagramFunction], k: int,
                         guard: bool = True,
                         alpha: Fraction | None = None) -> list[PStarExpansion]:
    """Expand several degree-<=k diagram functions over one shared solve.

    With alpha given, the solve runs over plain rationals and the
    expansion is valid only at that alpha (needed for functions that are
    shifted symmetric at a single alpha, like the shifted Schur case).
    """
    if alpha is not None:
        index, X = _expand_raw_at(funcs, k, alpha)
        out = [PStarExpansion(k, {index[i]: X[i][c] for i in range(len(index))})
               for c in range(len(funcs))]
    else:
        index, X, D, dens = _expand_raw(funcs, k)
        out = []
        for c in range(len(funcs)):
            total_den = D * dens[c]
            coeffs = {index[i]: AlphaFraction(X[i][c], total_den) for i in range(len(index))}
            out.append(PStarExpansion(k, coeffs))
    if guard:
        _guard(funcs, out, k, alpha)
    return out


def expand_in_pstar(f: DiagramFunction, k: int | None = None,
                    guard: bool = True,
                    alpha: Fraction | None = None) -> PStarExpansion:
    """Expand one diagram function over the p* products up to its degree."""
    if k is None:
        k = f.degree
    return expand_many_in_pstar([f], k, guard, alpha)[0]


#####################################################################
# multirectangular reconstruction
#####################################################################

@lru_cache(maxsize=None)
def pstar_on_multirect(k: int, d: int) -> MultiPoly:
    """The degree-k shifted power sum as a polynomial in block coordinates.

    Block s holds rows P_{s-1}+1 .. P_s (P_s = p_1 + ... + p_s) of length
    q_s = r_s + ... + r_d; summing i^m over each row interval is done with
    Faulhaber polynomials, so the result is polynomial in all 2d variables.
    """
    if k < 1:
        raise ValueError("degree must be positive")
    if d < 1:
        raise ValueError("need at least one block")
    half = Fraction(1, 2)
    out = MultiPoly.zero(d)
    prefix = MultiPoly.zero(d)
    for s in range(1, d + 1):
        p_prev = prefix
        prefix = prefix + MultiPoly.var_p(d, s)
        q_s = MultiPoly.zero(d)
        for t in range(s, d + 1):
            q_s = q_s + MultiPoly.var_r(d, t)
        c = q_s * ALPHA + MultiPoly.const(d, half)  # alpha*q_s + 1/2
        for m in range(k + 1):
            pow_diff = c ** (k - m) - MultiPoly.const(d, half ** (k - m))
            if pow_diff.is_zero():
                continue
            f_m = faulhaber(m)
            range_sum = _compose_univariate(f_m, prefix) - _compose_univariate(f_m, p_prev)
            term = range_sum * pow_diff * math.comb(k, m)
            out = out + (-term if m % 2 else term)
    return out


def _compose_univariate(poly: AlphaPoly, x: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(x.d)
    for c in reversed(poly.coeffs):
        out = out * x + MultiPoly.const(x.d, c)
    return out


@lru_cache(maxsize=None)
def _pstar_product_multirect(nu: Partition, d: int) -> MultiPoly:
    out = MultiPoly.const(d, 1)
    for part in nu:
        out = out * pstar_on_multirect(part, d)
    return out


def reconstruct_many_multirect(funcs: Sequence[DiagramFunction], k: int, d: int,
                               guard: bool = True,
                               expansions: Sequence[PStarExpansion] | None = None,
                               alpha: Fraction | None = None) -> list[MultiPoly]:
    """Polynomials in block coordinates matching each F on every diagram.

    Shares one linear solve across all functions; the solver output is
    reduced coefficient-by-coefficient before entering the multivariate
    stage, so only small fractions are combined there.  Any residual
    alpha-denominator in the combined result is an error.  Pass expansions
    to reuse an earlier expand_many_in_pstar result; with alpha given the
    whole pipeline is specialized to that rational value.
    """
    exps = expansions if expansions is not None else expand_many_in_pstar(funcs, k, guard, alpha)
    out = []
    for f, e in zip(funcs, exps):
        acc = MultiPoly.zero(d)
        for nu, c in e.coeffs.items():
            block = _pstar_product_multirect(nu, d)
            if alpha is not None:
                block = block.map_alpha(alpha)
                c = AlphaFraction.const(c.evaluate(alpha))
            acc = acc + block * c
        for key, coeff in acc.terms.items():
            if not coeff.is_polynomial():
                raise DenominatorNotCleared(f"{f.name}: coefficient {coeff!r} at {key}")
        out.append(acc)
    return out


def reconstruct_multirect(f: DiagramFunction, k: int | None = None, d: int = 1,
                          guard: bool = True,
                          alpha: Fraction | None = None) -> MultiPoly:
    if k is None:
        k = f.degree
    return reconstruct_many_multirect([f], k, d, guard, alpha=alpha)[0]


#####################################################################
# shifted Schur and shifted Jack evaluations
#####################################################################

def _det(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for t in range(n):
        piv = next((i for i in range(t, n) if m[i][t]), None)
        if piv is None:
            return Fraction(0)
        if piv != t:
            m[t], m[piv] = m[piv], m[t]
            det = -det
        det *= m[t][t]
        inv = 1 / m[t][t]
        for i in range(t + 1, n):
            if m[i][t]:
                f = m[i][t] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[t])]
    return det


def shifted_schur(mu: Partition, lam: Partition, rows: int | None = None) -> Fraction:
    """Shifted Schur function of index mu evaluated at the row lengths of lam.

    Determinant ratio in n = max(len(lam), len(mu)) variables x_i = lam_i
    (padded with zeros); the rows argument only widens n for stability
    checks.  Vanishes whenever lam does not contain mu.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    n = max(len(lam), len(mu))
    if rows is not None:
        if rows < n:
            raise ValueError("rows must be at least max of the lengths")
        n = rows
    if n == 0:
        return Fraction(1)
    x = [(lam[i] if i < len(lam) else 0) + n - 1 - i for i in range(n)]
    mu_pad = [(mu[j] if j < len(mu) else 0) for j in range(n)]
    num = [[Fraction(falling_factorial(x[i], mu_pad[j] + n - 1 - j)) for j in range(n)]
           for i in range(n)]
    den = [[Fraction(falling_factorial(x[i], n - 1 - j)) for j in range(n)]
           for i in range(n)]
    return _det(num) / _det(den)


def shifted_jack(mu: Partition, lam: Partition) -> AlphaFraction:
    """Shifted Jack function of index mu evaluated on lam.

    Assembled from the power-sum coefficients of the Jack polynomial of
    shape mu and the character-normalized evaluations on lam.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    k = size(mu)
    acc = F_ZERO
    for nu, th in jack_powersum_expansion(mu).items():
        chv = jack_character(nu, lam)
        if chv.is_zero():
            continue
        acc = acc + AlphaFraction(th * chv, ALPHA ** (k - len(nu)))
    return acc


def shifted_jack_scaled(mu: Partition, lam: Partition) -> AlphaFraction:
    """alpha^(|mu| - mu_1) times the shifted Jack value; the positivity target."""
    mu = check_partition(mu)
    e = size(mu) - (mu[0] if mu else 0)
    return shifted_jack(mu, lam) * (ALPHA ** e)


def ko_via_shifted_schur(mu: Partition, lam: Partition) -> Fraction:
    """Kostka-type evaluation assembled from shifted Schur values.

    Sum over nu of kostka(nu, mu) * shifted_schur(nu, lam); agrees with the
    Jack route at alpha = 1.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    acc = Fraction(0)
    for nu in partitions_of(size(mu)):
        kn = kostka(nu, mu)
        if kn:
            acc += kn * shifted_schur(nu, lam)
    return acc


#####################################################################
# ready-made diagram functions
#####################################################################

def pstar_function(nu: Partition) -> DiagramFunction:
    nu = check_partition(nu)
    return DiagramFunction(
        f"pstar{list(nu)}", size(nu),
        lambda lam: AlphaFraction(_pstar_product(nu, lam)))


def character_function(mu: Partition) -> DiagramFunction:
    mu = check_partition(mu)
    return DiagramFunction(
        f"ch{list(mu)}", size(mu),
        lambda lam: AlphaFraction(jack_character(mu, lam)))


def kostka_function(mu: Partition) -> DiagramFunction:
    mu = check_partition(mu)
    return DiagramFunction(
        f"ko{list(mu)}", size(mu),
        lambda lam: AlphaFraction(jack_kostka(mu, lam)))


def shifted_jack_function(mu: Partition) -> DiagramFunction:
    mu = check_partition(mu)
    return DiagramFunction(
        f"jstar{list(mu)}", size(mu),
        lambda lam: shifted_jack(mu, lam))


def shifted_jack_scaled_function(mu: Partition) -> DiagramFunction:
    mu = check_partition(mu)
    return DiagramFunction(
        f"jstar_scaled{list(mu)}", size(mu),
        lambda lam: shifted_jack_scaled(mu, lam))


def shifted_schur_function(mu: Partition) -> DiagramFunction:
    mu = check_partition(mu)
    return DiagramFunction(
        f"sstar{list(mu)}", size(mu),
        lambda lam: AlphaFraction(shifted_schur(mu, lam)))
