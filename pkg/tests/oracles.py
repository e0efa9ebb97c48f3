"""Independent reference implementations used only by the test suite.

Every oracle here recomputes a quantity by a route different from the one
the package uses, so agreement is evidence rather than tautology:

* Stirling numbers by brute enumeration of set partitions / permutations.
* Kostka numbers by counting horizontal-strip chains (Gelfand-Tsetlin
  style) instead of filling tableaux cell by cell.
* Irreducible symmetric group characters by coefficient extraction from
  power sums times the Vandermonde alternant.
* Standard Young tableau counts by box-addition chains instead of hook
  lengths.
* Shifted Schur values by the falling-factorial / skew-SYT dimension
  ratio.
* Jack monomial coefficients by Gram-Schmidt against the alpha-deformed
  power-sum inner product at sampled rational alpha.
"""

from fractions import Fraction
from functools import lru_cache
import itertools


# ---------------------------------------------------------------- counting

def stirling2_oracle(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    count = 0
    for labels in itertools.product(range(k), repeat=n - 1):
        # first element pinned to block 0 kills the block-relabel symmetry
        used = {0, *labels}
        if used == set(range(k)):
            # accept only canonical labelings: each new label extends the max
            top = 0
            ok = True
            for x in labels:
                if x > top + 1:
                    ok = False
                    break
                top = max(top, x)
            if ok:
                count += 1
    return count


def stirling1_signed_oracle(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    count = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cyc = 0
        for s in range(n):
            if not seen[s]:
                cyc += 1
                j = s
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        if cyc == k:
            count += 1
    return count if (n - k) % 2 == 0 else -count


def bell_number(n: int) -> int:
    return sum(stirling2_oracle(n, k) for k in range(n + 1))


def double_factorial_odd(k: int) -> int:
    """(2k-1)!! with the empty-product convention at k=0."""
    out = 1
    for i in range(1, 2 * k, 2):
        out *= i
    return out


# ------------------------------------------------- tableaux by growth chains

def _is_horizontal_strip(inner: tuple, outer: tuple) -> bool:
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if len(inner) > len(outer):
        return False
    prev_inner = None
    for i, out_row in enumerate(outer):
        if inner[i] > out_row:
            return False
        if prev_inner is not None and out_row > prev_inner:
            return False
        prev_inner = inner[i]
    return True


def _subdiagrams_with_size(outer: tuple, m: int):
    rows = [range(min(outer[i], outer[i - 1] if i else outer[0]) + 1)
            for i in range(len(outer))]
    for choice in itertools.product(*rows):
        got = tuple(x for x in sorted(choice, reverse=True) if x)
        if sum(got) == m and all(choice[i] >= choice[i + 1]
                                 for i in range(len(choice) - 1)):
            yield got


def kostka_oracle(lam: tuple, mu: tuple) -> int:
    """Count weight-mu semistandard tableaux of shape lam via chains
    of horizontal strips (the entry-i cells form the i-th strip)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0

    @lru_cache(maxsize=None)
    def chains(outer: tuple, depth: int) -> int:
        if depth == 0:
            return 1 if not outer else 0
        total = 0
        for inner in _subdiagrams_with_size(outer, sum(mu[:depth - 1])):
            if _is_horizontal_strip(inner, outer):
                total += chains(inner, depth - 1)
        return total

    return chains(lam, len(mu))


def syt_oracle(lam: tuple) -> int:
    """Standard tableaux counted by one-box growth chains."""
    return skew_syt_oracle(tuple(lam), ())


def skew_syt_oracle(lam: tuple, mu: tuple) -> int:
    lam, mu = tuple(lam), tuple(mu)
    mu_full = mu + (0,) * (len(lam) - len(mu))
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu_full, lam)):
        return 0

    @lru_cache(maxsize=None)
    def grow(cur: tuple) -> int:
        if cur == lam:
            return 1
        total = 0
        rows = list(cur) + [0] * (len(lam) - len(cur))
        for i in range(len(lam)):
            row = rows[i]
            cap = lam[i]
            above = rows[i - 1] if i else cap
            if row < cap and row < above:
                nxt = rows[:]
                nxt[i] += 1
                total += grow(tuple(x for x in nxt if x))
        return total

    return grow(tuple(x for x in mu_full if x))


def shifted_schur_oracle(mu: tuple, lam: tuple) -> Fraction:
    """Dimension-ratio formula: (n)_k * f^{lam/mu} / f^lam."""
    n, k = sum(lam), sum(mu)
    if k > n:
        return Fraction(0)
    falling = 1
    for i in range(k):
        falling *= n - i
    return Fraction(falling * skew_syt_oracle(lam, mu), syt_oracle(lam))


# ---------------------------------------------- characters via alternants

def _partitions_oracle(n: int):
    def rec(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(n, n)


def character_oracle(lam: tuple, mu: tuple) -> int:
    """Coefficient of x^(lam + delta) in p_mu times the expanded
    Vandermonde alternant, with n = len(lam) variables."""
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam)
    if n == 0:
        return 1 if not mu else 0
    delta = tuple(range(n - 1, -1, -1))
    poly: dict[tuple, int] = {}
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        key = tuple(delta[p] for p in perm)
        poly[key] = poly.get(key, 0) + (-1 if inv % 2 else 1)
    for part in mu:
        nxt: dict[tuple, int] = {}
        for key, c in poly.items():
            for i in range(n):
                lifted = list(key)
                lifted[i] += part
                lk = tuple(lifted)
                nxt[lk] = nxt.get(lk, 0) + c
        poly = nxt
    target = tuple(l + d for l, d in zip(lam, delta))
    return poly.get(target, 0)


# --------------------------------- Jack polynomials via Gram orthogonality

def _monomial_poly(lam: tuple, n: int) -> dict:
    out = {}
    padded = tuple(lam) + (0,) * (n - len(lam))
    for perm in set(itertools.permutations(padded)):
        out[perm] = Fraction(1)
    return out


def _powersum_poly(mu: tuple, n: int) -> dict:
    poly = {(0,) * n: Fraction(1)}
    for part in mu:
        nxt: dict[tuple, Fraction] = {}
        for key, c in poly.items():
            for i in range(n):
                lifted = list(key)
                lifted[i] += part
                lk = tuple(lifted)
                nxt[lk] = nxt.get(lk, Fraction(0)) + c
        poly = nxt
    return poly


def _dominates_oracle(a: tuple, b: tuple) -> bool:
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta < tb:
            return False
    return True


def _zee(mu: tuple) -> int:
    out = 1
    for part in set(mu):
        m = mu.count(part)
        out *= part ** m
        for i in range(1, m + 1):
            out *= i
    return out


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    m = len(b)
    aug = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][m] for r in range(m)]


def jack_monomial_oracle(n: int, alpha: Fraction) -> dict:
    """hatK values at one rational alpha: {(lam, tau): Fraction}.

    Monomials are expanded in n variables, rewritten in the power-sum
    basis, and each Jack vector is solved for from the orthogonality
    <J_lam, m_nu> = 0 for every nu strictly dominated by lam, then scaled
    so the m_{1^n} coefficient is n factorial.
    """
    alpha = Fraction(alpha)
    parts = list(_partitions_oracle(n))
    idx = {lam: i for i, lam in enumerate(parts)}
    m = len(parts)

    # p_mu = sum_lam c[mu][lam] m_lam: read off at the dominant exponent
    c = [[Fraction(0)] * m for _ in range(m)]
    for i, mu in enumerate(parts):
        poly = _powersum_poly(mu, n)
        for j, lam in enumerate(parts):
            key = tuple(lam) + (0,) * (n - len(lam))
            c[i][j] = poly.get(key, Fraction(0))

    # m in the p basis: invert c
    inv_rows = []
    for j in range(m):
        rhs = [Fraction(1) if i == j else Fraction(0) for i in range(m)]
        col = _solve([[c[i][k] for i in range(m)] for k in range(m)], rhs)
        inv_rows.append(col)
    # inv_rows[j][i]: coefficient of p_i in m_j

    def pairing(u: list[Fraction], v: list[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, mu in enumerate(parts):
            if u[i] and v[i]:
                total += u[i] * v[i] * _zee(mu) * alpha ** len(mu)
        return total

    gram = [[pairing(inv_rows[a], inv_rows[b]) for b in range(m)]
            for a in range(m)]

    out = {}
    ones = tuple([1] * n)
    for j, lam in enumerate(parts):
        lower = [b for b in range(m) if b != j
                 and _dominates_oracle(lam, parts[b])]
        coeffs = [Fraction(0)] * m
        coeffs[j] = Fraction(1)
        if lower:
            mat = [[gram[a][b] for b in lower] for a in lower]
            rhs = [-gram[a][j] for a in lower]
            sol = _solve(mat, rhs)
            for pos, b in enumerate(lower):
                coeffs[b] = sol[pos]
        scale = Fraction(1)
        for i in range(2, n + 1):
            scale *= i
        scale /= coeffs[idx[ones]]
        for b, v in enumerate(coeffs):
            out[(lam, parts[b])] = v * scale
    return out
