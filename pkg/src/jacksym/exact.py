"""Exact arithmetic kernel.

Everything in this package is exact: scalars are ``fractions.Fraction``,
univariate polynomials (usually in the deformation parameter alpha) are dense
coefficient tuples over Fraction, rational functions are reduced
numerator/denominator pairs, and polynomials in the paired variable banks
p_1..p_d, r_1..r_d are sparse exponent maps.  No floating point anywhere.

The module also provides the two basis conversions used throughout: powers to
falling factorials (variable by variable, alpha stays in the power basis) and
back, plus a fraction-free linear solver over polynomial entries which the
higher layers use to expand functions in a triangular-ish basis without ever
leaving exact arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = Fraction


class NonPolynomialAlpha(ValueError):
    """A coefficient that had to be a polynomial in alpha was not."""


class SingularSystem(ValueError):
    """The linear system being solved exactly has no unique solution."""


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


#####################################################################
# dense univariate polynomials
#####################################################################

def _int_clear(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    # common denominator so products can run over plain ints
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def _pack(a: Sequence[int], bits: int) -> int:
    v = 0
    for c in reversed(a):
        v = (v << bits) + c
    return v


def _unpack(v: int, bits: int, n: int) -> list[int]:
    # balanced digits: valid because every true coefficient fits in bits-1 bits
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(n):
        d = v & mask
        v >>= bits
        if d >= half:
            d -= 1 << bits
            v += 1
        out.append(d)
    return out


def _mul_int_lists(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if len(a) * len(b) <= 400:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 1
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, n)


def _divexact_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # exact long division; exactness is guaranteed by the fraction-free
    # elimination that calls this, and asserted anyway
    if not any(a):
        return []
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    while r and r[-1] == 0:
        r.pop()
    q = [0] * (len(r) - db)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + db]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        ci = c // lead
        q[i] = ci
        if ci:
            for j, bj in enumerate(b):
                r[i + j] -= ci * bj
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q


class AlphaPoly:
    """Dense univariate polynomial over Fraction, lowest degree first.

    The variable is alpha unless a caller documents otherwise (the Faulhaber
    polynomials reuse this class with the summation bound as the variable).
    No trailing zero coefficients are stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "AlphaPoly":
        return AlphaPoly((Fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) > 1:
            raise ValueError("not a constant polynomial")
        return self.coeffs[0]

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == AlphaPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(("AlphaPoly", self.coeffs))

    def __neg__(self) -> "AlphaPoly":
        return AlphaPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "AlphaPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return AlphaPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "AlphaPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "AlphaPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "AlphaPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return AlphaPoly()
            return AlphaPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return AlphaPoly()
        a, da = _int_clear(self.coeffs)
        b, db = _int_clear(other.coeffs)
        prod = _mul_int_lists(a, b)
        den = da * db
        return AlphaPoly(tuple(Fraction(c, den) for c in prod))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AlphaPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = AlphaPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift_up(self, k: int) -> "AlphaPoly":
        """Multiply by the variable to the k-th power."""
        if not self.coeffs:
            return self
        return AlphaPoly((Fraction(0),) * k + self.coeffs)

    def divmod(self, other: "AlphaPoly") -> tuple["AlphaPoly", "AlphaPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: list[Fraction] = []
        r = list(self.coeffs)
        db = other.degree
        lead = other.leading()
        q = [Fraction(0)] * max(0, len(r) - db)
        for i in range(len(q) - 1, -1, -1):
            c = r[i + db] / lead
            q[i] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    r[i + j] -= c * bj
        return AlphaPoly(q), AlphaPoly(r)

    def divexact(self, other: "AlphaPoly") -> "AlphaPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "AlphaPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return AlphaPoly(tuple(c / lead for c in self.coeffs))

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_str(self, var: str = "alpha") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                body = format_rational(abs(c))
            else:
                v = var if e == 1 else f"{var}^{e}"
                body = v if abs(c) == 1 else f"{format_rational(abs(c))}*{v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"AlphaPoly({self.to_str()})"


def _coerce_poly(x):
    if isinstance(x, AlphaPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return AlphaPoly.const(x)
    return NotImplemented


ALPHA = AlphaPoly((0, 1))
P_ONE = AlphaPoly((1,))
P_ZERO = AlphaPoly(())


def poly_gcd(f: AlphaPoly, g: AlphaPoly) -> AlphaPoly:
    """Monic gcd by the Euclidean algorithm over Fraction coefficients."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
        # keep coefficients small; content does not change the gcd
        if b.coeffs:
            b = b.monic()
    return a.monic()


#####################################################################
# rational functions in alpha
#####################################################################

class AlphaFraction:
    """Quotient of two alpha-polynomials, reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, AlphaFraction):
            if den is not None:
                raise TypeError("fraction numerator with explicit denominator")
            num, den = num.num, num.den
        num = _coerce_poly(num)
        den = P_ONE if den is None else _coerce_poly(den)
        if den is NotImplemented or num is NotImplemented:
            raise TypeError("cannot build AlphaFraction from these operands")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = P_ONE
        elif den.is_const():
            num = num * (1 / den.const_value())
            den = P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
            lead = den.leading()
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        self.num = num
        self.den = den

    @staticmethod
    def const(c) -> "AlphaFraction":
        return AlphaFraction(AlphaPoly.const(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def as_poly(self) -> AlphaPoly:
        if not self.is_polynomial():
            raise NonPolynomialAlpha(f"not polynomial in alpha: {self!r}")
        return self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("AlphaFraction", self.num.coeffs, self.den.coeffs))

    def __neg__(self) -> "AlphaFraction":
        out = object.__new__(AlphaFraction)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other) -> "AlphaFraction":
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return AlphaFraction(self.num + other.num, self.den)
        return AlphaFraction(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "AlphaFraction":
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return AlphaFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AlphaFraction":
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return AlphaFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def evaluate(self, x: Fraction) -> Fraction:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.evaluate(x) / d

    def to_str(self, var: str = "alpha") -> str:
        if self.is_polynomial():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)}) / ({self.den.to_str(var)})"

    def __repr__(self) -> str:
        return f"AlphaFraction({self.to_str()})"


def _coerce_frac(x):
    if isinstance(x, AlphaFraction):
        return x
    if isinstance(x, (int, Fraction, AlphaPoly)):
        return AlphaFraction(x)
    return NotImplemented


F_ONE = AlphaFraction(P_ONE)
F_ZERO = AlphaFraction(P_ZERO)


#####################################################################
# sparse polynomials in the paired variable banks
#####################################################################

class MultiPoly:
    """Sparse polynomial in p_1..p_d and r_1..r_d over AlphaFraction.

    Keys are exponent tuples of length 2d: p-exponents first, then
    r-exponents.  Zero coefficients are never stored.  The canonical term
    order is graded lexicographic on the exponent vector.
    """

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict | None = None):
        self.d = d
        self.terms: dict[tuple[int, ...], AlphaFraction] = {}
        if terms:
            for k, v in terms.items():
                if not isinstance(v, AlphaFraction):
                    v = AlphaFraction(v)
                if v:
                    if len(k) != 2 * d:
                        raise ValueError("exponent tuple has wrong length")
                    self.terms[tuple(k)] = v

    @staticmethod
    def zero(d: int) -> "MultiPoly":
        return MultiPoly(d)

    @staticmethod
    def const(d: int, c) -> "MultiPoly":
        return MultiPoly(d, {(0,) * (2 * d): AlphaFraction(c)})

    @staticmethod
    def var_p(d: int, i: int) -> "MultiPoly":
        # i is 1-based
        key = [0] * (2 * d)
        key[i - 1] = 1
        return MultiPoly(d, {tuple(key): F_ONE})

    @staticmethod
    def var_r(d: int, j: int) -> "MultiPoly":
        key = [0] * (2 * d)
        key[d + j - 1] = 1
        return MultiPoly(d, {tuple(key): F_ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly(self.d)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, AlphaPoly, AlphaFraction)):
            other = MultiPoly.const(self.d, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.d != other.d:
            raise ValueError("mixed variable bank sizes")
        out = MultiPoly(self.d)
        out.terms = dict(self.terms)
        for k, v in other.terms.items():
            s = out.terms.get(k)
            s = v if s is None else s + v
            if s:
                out.terms[k] = s
            else:
                out.terms.pop(k, None)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, AlphaPoly, AlphaFraction)):
            other = MultiPoly.const(self.d, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, AlphaPoly, AlphaFraction)):
            c = other if isinstance(other, AlphaFraction) else AlphaFraction(other)
            out = MultiPoly(self.d)
            if c:
                out.terms = {k: v * c for k, v in self.terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.d != other.d:
            raise ValueError("mixed variable bank sizes")
        out = MultiPoly(self.d)
        acc = out.terms
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = acc.get(k)
                s = v1 * v2 if s is None else s + v1 * v2
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.d, 1)
        for _ in range(n):
            out = out * self
        return out

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def coefficient(self, key: tuple[int, ...]) -> AlphaFraction:
        return self.terms.get(tuple(key), F_ZERO)

    def canonical_terms(self) -> list[tuple[tuple[int, ...], AlphaFraction]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def evaluate(self, p_vals: Sequence, r_vals: Sequence) -> AlphaFraction:
        if len(p_vals) != self.d or len(r_vals) != self.d:
            raise ValueError("need d values per bank")
        vals = [Fraction(v) for v in p_vals] + [Fraction(v) for v in r_vals]
        acc = F_ZERO
        for k, c in self.terms.items():
            m = Fraction(1)
            for e, v in zip(k, vals):
                if e:
                    m *= v ** e
            acc = acc + c * m
        return acc

    def substitute(self, p_subs: Sequence["MultiPoly"],
                   r_subs: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace every p_i and r_j by the given polynomials."""
        if len(p_subs) != self.d or len(r_subs) != self.d:
            raise ValueError("need d substitutions per bank")
        subs = list(p_subs) + list(r_subs)
        d_out = subs[0].d
        out = MultiPoly.zero(d_out)
        for k, c in self.terms.items():
            term = MultiPoly.const(d_out, c)
            for e, s in zip(k, subs):
                for _ in range(e):
                    term = term * s
            out = out + term
        return out

    def map_alpha(self, alpha: Fraction) -> "MultiPoly":
        """Specialize alpha to a rational number."""
        out = MultiPoly(self.d)
        for k, c in self.terms.items():
            v = c.evaluate(alpha)
            if v:
                out.terms[k] = AlphaFraction(v)
        return out

    def to_json_terms(self) -> list[dict]:
        """Canonical JSON term list; coefficients must be polynomial in alpha."""
        out = []
        for k, c in self.canonical_terms():
            poly = c.as_poly()
            for e, q in enumerate(poly.coeffs):
                if q:
                    out.append({
                        "alpha": e,
                        "p": list(k[:self.d]),
                        "r": list(k[self.d:]),
                        "coeff": format_rational(q),
                    })
        out.sort(key=lambda t: (sum(t["p"]) + sum(t["r"]), t["p"], t["r"], t["alpha"]))
        return out

    @staticmethod
    def from_json_terms(d: int, terms: list[dict]) -> "MultiPoly":
        out = MultiPoly.zero(d)
        for t in terms:
            key = tuple(t["p"]) + tuple(t["r"])
            c = AlphaFraction(AlphaPoly((0,) * t["alpha"] + (parse_rational(t["coeff"]),)))
            cur = out.terms.get(key)
            cur = c if cur is None else cur + c
            if cur:
                out.terms[key] = cur
            else:
                out.terms.pop(key, None)
        return out

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        names = [f"p{i+1}" for i in range(self.d)] + [f"r{j+1}" for j in range(self.d)]
        parts = []
        for k, c in self.canonical_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, k) if e
            )
            cs = c.to_str()
            if mono:
                cs = f"({cs})*{mono}" if (" " in cs or "/" in cs) else f"{cs}*{mono}"
            parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly(d={self.d}, {self.to_str()})"


#####################################################################
# falling-factorial expansions
#####################################################################

class FFExpansion:
    """Linear combination of alpha^c * prod (p_i)_{a_i} * prod (r_j)_{b_j}.

    Keys are (c, a, b) with a and b exponent tuples of length d; values are
    nonzero Fractions.  This is the basis in which nonnegativity certificates
    are stated.
    """

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict | None = None):
        self.d = d
        self.terms: dict[tuple[int, tuple[int, ...], tuple[int, ...]], Fraction] = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    c, a, b = k
                    self.terms[(int(c), tuple(a), tuple(b))] = v

    def __eq__(self, other):
        if not isinstance(other, FFExpansion):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def add_term(self, c: int, a: Sequence[int], b: Sequence[int], coeff: Fraction):
        key = (c, tuple(a), tuple(b))
        cur = self.terms.get(key, Fraction(0)) + coeff
        if cur:
            self.terms[key] = cur
        else:
            self.terms.pop(key, None)

    def canonical_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0][1]) + sum(kv[0][2]), kv[0][1], kv[0][2], kv[0][0]),
        )

    def is_nonnegative(self) -> tuple[bool, list]:
        """All coefficients >= 0?  Returns (flag, complete witness list)."""
        witnesses = [(k, v) for k, v in self.canonical_terms() if v < 0]
        return (not witnesses, witnesses)

    def to_json_terms(self) -> list[dict]:
        return [
            {"alpha": k[0], "p": list(k[1]), "r": list(k[2]),
             "coeff": format_rational(v)}
            for k, v in self.canonical_terms()
        ]

    @staticmethod
    def from_json_terms(d: int, terms: list[dict]) -> "FFExpansion":
        out = FFExpansion(d)
        for t in terms:
            out.add_term(t["alpha"], tuple(t["p"]), tuple(t["r"]),
                         parse_rational(t["coeff"]))
        return out

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (c, a, b), v in self.canonical_terms():
            factors = []
            if c:
                factors.append("alpha" if c == 1 else f"alpha^{c}")
            for i, e in enumerate(a):
                if e:
                    factors.append(f"ff(p{i+1},{e})")
            for j, e in enumerate(b):
                if e:
                    factors.append(f"ff(r{j+1},{e})")
            mono = "*".join(factors) if factors else "1"
            parts.append(f"{format_rational(v)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FFExpansion(d={self.d}, {self.to_str()})"


#####################################################################
# Stirling numbers and the basis conversions
#####################################################################

@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-set into k nonempty blocks."""
    if n < 0 or k < 0:
        raise ValueError("negative argument")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _falling_in_powers(a: int) -> tuple[int, ...]:
    """Coefficients of (x)_a in the power basis (signed Stirling numbers)."""
    if a == 0:
        return (1,)
    prev = _falling_in_powers(a - 1)
    # multiply by (x - (a-1))
    out = [0] * (a + 1)
    for e, c in enumerate(prev):
        out[e + 1] += c
        out[e] -= (a - 1) * c
    return tuple(out)


def stirling1_signed(n: int, k: int) -> int:
    """Coefficient of x^k in the falling factorial (x)_n."""
    if n < 0 or k < 0:
        raise ValueError("negative argument")
    row = _falling_in_powers(n)
    return row[k] if k < len(row) else 0


def falling_factorial(x: Fraction, a: int) -> Fraction:
    out = Fraction(1)
    for i in range(a):
        out *= x - i
    return out


def to_falling_factorial(poly: MultiPoly) -> FFExpansion:
    """Rewrite each p/r variable in the falling-factorial basis.

    Alpha stays in the power basis.  Raises NonPolynomialAlpha if any
    coefficient is a genuine rational function of alpha.
    """
    out = FFExpansion(poly.d)
    for key, coeff in poly.terms.items():
        cpoly = coeff.as_poly()
        # distribution over falling factorials, one variable at a time
        expansions = [[(0, Fraction(1))]]
        for n in key:
            cur = []
            for k in range(0, n + 1):
                s = stirling2(n, k)
                if s:
                    cur.append((k, Fraction(s)))
            expansions.append(cur)
        # combine: iterative product over variables
        combos: list[tuple[tuple[int, ...], Fraction]] = [((), Fraction(1))]
        for cur in expansions[1:]:
            combos = [(idx + (k,), q * s) for idx, q in combos for k, s in cur]
        for idx, q in combos:
            a, b = idx[:poly.d], idx[poly.d:]
            for e, ac in enumerate(cpoly.coeffs):
                if ac:
                    out.add_term(e, a, b, ac * q)
    return out


def from_falling_factorial(ff: FFExpansion) -> MultiPoly:
    """Inverse of to_falling_factorial."""
    out = MultiPoly.zero(ff.d)
    for (c, a, b), coeff in ff.terms.items():
        term = MultiPoly.const(ff.d, AlphaFraction(AlphaPoly((0,) * c + (coeff,))))
        for i, e in enumerate(a + b):
            if e:
                row = _falling_in_powers(e)
                var = MultiPoly(ff.d)
                for k, s in enumerate(row):
                    if s:
                        kk = [0] * (2 * ff.d)
                        kk[i] = k
                        var.terms[tuple(kk)] = AlphaFraction(s)
                term = term * var
        out = out + term
    return out


def faulhaber(k: int) -> AlphaPoly:
    """The polynomial S_k with S_k(n) = 1^k + 2^k + ... + n^k.

    The variable of the returned polynomial is the upper bound n.
    """
    if k < 0:
        raise ValueError("negative exponent")
    # Lagrange interpolation through n = 0 .. k+1; degree k+1 is enough
    pts = list(range(k + 2))
    vals = []
    acc = Fraction(0)
    for n in pts:
        if n:
            acc += Fraction(n) ** k
        vals.append(acc)
    out = AlphaPoly()
    for i, xi in enumerate(pts):
        li = AlphaPoly.const(1)
        denom = Fraction(1)
        for j, xj in enumerate(pts):
            if i != j:
                li = li * AlphaPoly((-xj, 1))
                denom *= xi - xj
        out = out + li * (vals[i] / denom)
    return out


#####################################################################
# exact linear algebra
#####################################################################

def solve_fraction_system(A: list[list[Fraction]],
                          B: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gaussian elimination over Fraction; returns X with A X = B.

    B is given and returned as a list of rows (same row count as A).
    """
    n = len(A)
    m = len(B[0]) if n else 0
    M = [list(map(Fraction, A[i])) + list(map(Fraction, B[i])) for i in range(n)]
    for t in range(n):
        piv = next((i for i in range(t, n) if M[i][t]), None)
        if piv is None:
            raise SingularSystem("no pivot available")
        M[t], M[piv] = M[piv], M[t]
        inv = 1 / M[t][t]
        M[t] = [c * inv for c in M[t]]
        for i in range(n):
            if i != t and M[i][t]:
                f = M[i][t]
                M[i] = [c - f * ct for c, ct in zip(M[i], M[t])]
    return [row[n:] for row in M]


def _row_to_int_lists(row: list[AlphaPoly]) -> list[list[int]]:
    den = 1
    for p in row:
        for c in p.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
    return [[int(c * den) for c in p.coeffs] for p in row]


def _ints_sub(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = list(a)
    for i, c in enumerate(b):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _ints_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def solve_poly_system(A: list[list[AlphaPoly]],
                      B: list[list[AlphaPoly]]) -> tuple[list[list[AlphaPoly]], AlphaPoly]:
    """Fraction-free solve of A X = B over alpha-polynomials.

    Returns (X, D) where every solution entry is X[i][j] / D with X[i][j]
    and D polynomials.  Row scaling keeps all arithmetic over integers;
    Bareiss elimination plus fraction-free back substitution keeps the
    intermediate entries as exact minors.  Raises SingularSystem when the
    matrix is singular.
    """
    n = len(A)
    if n == 0:
        return [], P_ONE
    m = len(B[0])
    rows = [_row_to_int_lists(list(A[i]) + list(B[i])) for i in range(n)]
    prev = [1]
    for t in range(n):
        piv = None
        best = None
        for i in range(t, n):
            if rows[i][t]:
                d = len(rows[i][t])
                if best is None or d < best:
                    best, piv = d, i
        if piv is None:
            raise SingularSystem("singular polynomial system")
        if piv != t:
            rows[t], rows[piv] = rows[piv], rows[t]
        ptt = rows[t][t]
        for i in range(t + 1, n):
            rit = rows[i][t]
            if rit:
                for j in range(t + 1, n + m):
                    num = _ints_sub(_mul_int_lists(ptt, rows[i][j]),
                                    _mul_int_lists(rit, rows[t][j]))
                    rows[i][j] = _divexact_int(num, prev) if num else []
                rows[i][t] = []
            else:
                for j in range(t + 1, n + m):
                    num = _mul_int_lists(ptt, rows[i][j])
                    rows[i][j] = _divexact_int(num, prev) if num else []
        prev = ptt
    det = rows[n - 1][n - 1]
    X: list[list[AlphaPoly]] = [[P_ZERO] * m for _ in range(n)]
    for c in range(m):
        xs: list[list[int]] = [[] for _ in range(n)]
        xs[n - 1] = rows[n - 1][n + c]
        for i in range(n - 2, -1, -1):
            num = _mul_int_lists(det, rows[i][n + c])
            for j in range(i + 1, n):
                if rows[i][j] and xs[j]:
                    num = _ints_sub(num, _mul_int_lists(rows[i][j], xs[j]))
            num = _ints_trim(num)
            xs[i] = _divexact_int(num, rows[i][i]) if num else []
        for i in range(n):
            X[i][c] = AlphaPoly(xs[i])
    return X, AlphaPoly(det)
