"""Batch command line front end.

Exposes the main computation routes of the library (Jack expansions,
shifted-function evaluation and expansion, block-coordinate
reconstruction, the alpha = 1 and alpha = 2 summation formulas, and the
marked-tableau models), plus two harnesses: `verify-conjecture`
certifies falling-factorial nonnegativity, and `crossval` checks that
every pair of independent routes to the same polynomial agrees exactly.

Exit codes: 0 for success / all checks passing, 1 for a failed check
(witnesses on stdout), 2 for usage errors.  Output is deterministic:
byte-identical across repeated runs and across --jobs settings.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import hooktab
from .exact import (
    AlphaFraction,
    MultiPoly,
    format_rational,
    to_falling_factorial,
)
from .jack import jack_monomial_expansion, jack_powersum_expansion
from .jack import jack_kostka
from .partitions import (
    centralizer_size,
    check_partition,
    integer_grid,
    partitions_of,
    to_partition,
)
from .shifted import (
    character_function,
    expand_in_pstar,
    kostka_function,
    reconstruct_many_multirect,
    reconstruct_multirect,
    shifted_jack_function,
    shifted_jack_scaled_function,
    shifted_schur_function,
)
from .stanley import (
    b_coeff,
    ch1_multirect,
    question_scan,
    stanley_signed_coeffs,
)
from .symfun import character_table, kostka_table
from .zonal import (
    b2_scan,
    ch2_multirect,
    ko2_multirect,
    type_census,
    zstar_multirect,
)
from .combinatorics import set_partitions_stream

# Safety bounds lifted by --unbounded; defaults keep each command within
# a few minutes of exact arithmetic on one core.
JACK_SIZE_LIMIT = 8
EVAL_SIZE_LIMIT = 8
TABLE_SIZE_LIMIT = 8
RECON_SIZE_LIMIT = 6
RECON_D_LIMIT = 3
CONJ_SIZE_LIMIT = 5
CONJ_D_LIMIT = 2
CONJ_D3_SIZE_LIMIT = 4
CROSSVAL_SIZE_LIMIT = 4
CROSSVAL_D_LIMIT = 2
ZONAL_SIZE_CAP = 3
BIJECTION_SIZE_LIMIT = 6
BIJECTION_K_LIMIT = 4
B_SCAN_LIMIT = 5
FF_K_LIMIT = 6


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: one command plus its shared knobs."""

    command: str
    action: str | None
    mu: tuple[int, ...] | None
    k: int | None
    d: int
    max_size: int
    alpha: Fraction | None
    fmt: str
    jobs: int
    unbounded: bool


#####################################################################
# argument parsing
#####################################################################

def _partition_arg(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    return check_partition(tuple(int(x) for x in text.split(",")))


def _fraction_arg(text: str) -> Fraction:
    return Fraction(text)


def _boxes_arg(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for chunk in text.split(";"):
        i, j = chunk.split(",")
        out.append((int(i), int(j)))
    return tuple(out)


def _arrows_arg(text: str):
    out = []
    for chunk in text.split(";"):
        box, spec = chunk.split("=")
        i, j = box.split(",")
        kind, off = spec[0], int(spec[1:])
        if kind not in "RD":
            raise ValueError(f"arrow kind must be R or D, got {kind!r}")
        arrow = hooktab.Right(off) if kind == "R" else hooktab.Down(off)
        out.append(((int(i), int(j)), arrow))
    return tuple(out)


def _labels_arg(text: str) -> tuple[tuple[tuple[int, int], int], ...]:
    out = []
    for chunk in text.split(";"):
        box, val = chunk.split("=")
        i, j = box.split(",")
        out.append(((int(i), int(j)), int(val)))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None,
                        help="output format (default: text, except where noted)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for batch verification")
    common.add_argument("--unbounded", action="store_true",
                        help="lift the built-in size limits")

    top = argparse.ArgumentParser(
        prog="jacksym",
        description="Exact Jack-polynomial coefficient functions, their "
                    "block-coordinate polynomials, and positivity checks.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jack", parents=[common],
                       help="Jack polynomial expansions and integer tables")
    pa = p.add_subparsers(dest="action", required=True)
    q = pa.add_parser("expand", parents=[common],
                      help="monomial and power-sum expansions of one Jack polynomial")
    q.add_argument("--shape", type=_partition_arg, required=True, metavar="a,b,c")
    q = pa.add_parser("tables", parents=[common],
                      help="character and Kostka tables as JSON (default format)")
    q.add_argument("--max-size", type=int, default=6)

    p = sub.add_parser("shifted", parents=[common],
                       help="evaluate or expand shifted functions on diagrams")
    pa = p.add_subparsers(dest="action", required=True)
    for name in ("eval", "expand"):
        q = pa.add_parser(name, parents=[common])
        q.add_argument("--function", required=True,
                       choices=("ch", "ko", "jackstar", "jackstar-scaled", "schur"))
        q.add_argument("--mu", type=_partition_arg, required=True, metavar="a,b,c")
        q.add_argument("--alpha", type=_fraction_arg, default=None, metavar="q")
        if name == "eval":
            q.add_argument("--lam", type=_partition_arg, required=True, metavar="a,b,c")

    p = sub.add_parser("reconstruct", parents=[common],
                       help="polynomial in block coordinates (JSON by default)")
    p.add_argument("--function", required=True,
                   choices=("ch", "ko", "jackstar", "jackstar-scaled", "schur"))
    p.add_argument("--mu", type=_partition_arg, required=True, metavar="a,b,c")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--alpha", type=_fraction_arg, default=None, metavar="q",
                   help="specialize alpha to a rational (spot checks)")
    p.add_argument("--alpha-symbolic", action="store_true",
                   help="keep alpha formal (the default)")
    p.add_argument("--ff", action="store_true",
                   help="also emit the falling-factorial expansion and its "
                        "nonnegativity certificate (exit 1 on a negative term)")

    p = sub.add_parser("stanley", parents=[common],
                       help="alpha = 1 permutation-sum formulas and scans")
    pa = p.add_subparsers(dest="action", required=True)
    q = pa.add_parser("ch", parents=[common],
                      help="character polynomial plus its signed coefficients")
    q.add_argument("--mu", type=_partition_arg, required=True, metavar="a,b,c")
    q.add_argument("--d", type=int, default=1)
    q = pa.add_parser("verify-b", parents=[common],
                      help="signed block-pair coefficients are nonnegative")
    q.add_argument("--k", type=int, default=5)
    q = pa.add_parser("question35", parents=[common],
                      help="minimum of the signed triple sum over block triples")
    q.add_argument("--k", type=int, default=4)

    p = sub.add_parser("zonal", parents=[common],
                       help="alpha = 2 matching-sum formulas and scans")
    pa = p.add_subparsers(dest="action", required=True)
    for name in ("zstar", "ch2", "ko2"):
        q = pa.add_parser(name, parents=[common])
        q.add_argument("--mu", type=_partition_arg, required=True, metavar="a,b,c")
        q.add_argument("--d", type=int, default=1)
    q = pa.add_parser("census", parents=[common],
                      help="pair-type census against the closed formula")
    q.add_argument("--k", type=int, default=4)
    q = pa.add_parser("b2scan", parents=[common],
                      help="exploratory minimum of the spherical-weighted coefficients")
    q.add_argument("--k", type=int, default=2)

    p = sub.add_parser("hooktab", parents=[common],
                       help="marked-tableau models of the one-row coefficients")
    pa = p.add_subparsers(dest="action", required=True)
    q = pa.add_parser("verify", parents=[common],
                      help="bijection suite: round trips plus four-way weight sums")
    q.add_argument("--max-size", type=int, default=6)
    q.add_argument("--k", type=int, default=4, help="largest mark count")
    q = pa.add_parser("ff", parents=[common],
                      help="direct falling-factorial expansion with certificate")
    q.add_argument("--k", type=int, default=4)
    q.add_argument("--d", type=int, default=2)
    q = pa.add_parser("trace", parents=[common],
                      help="step-by-step rewriting trace of one tableau")
    q.add_argument("--direction", choices=("psi", "phi"), default="psi")
    q.add_argument("--shape", type=_partition_arg, default=None, metavar="a,b,c")
    q.add_argument("--marks", type=_boxes_arg, default=None, metavar="i,j;i,j",
                   help="marked boxes for --direction psi")
    q.add_argument("--arrows", type=_arrows_arg, default=None,
                   metavar="i,j=R2;i,j=D1")
    q.add_argument("--labels", type=_labels_arg, default=None,
                   metavar="i,j=v;i,j=v", help="labeled boxes for --direction phi")

    p = sub.add_parser("verify-conjecture", parents=[common],
                       help="falling-factorial nonnegativity of the scaled "
                            "shifted Jack and Kostka polynomials")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--d", type=int, default=2)

    p = sub.add_parser("crossval", parents=[common],
                       help="exact agreement of all independent routes")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--perturb", action="store_true",
                   help="negative self-test: inject a one-term error and "
                        "require the comparison to report it")

    return top


def _resolve_format(args, default: str) -> str:
    return args.format if args.format is not None else default


#####################################################################
# rendering helpers
#####################################################################

def _mu_str(mu) -> str:
    return "(" + ",".join(str(x) for x in mu) + ")"


def _ff_key_str(key) -> str:
    c, a, b = key
    factors = []
    if c:
        factors.append("alpha" if c == 1 else f"alpha^{c}")
    for i, e in enumerate(a):
        if e:
            factors.append(f"ff(p{i + 1},{e})")
    for j, e in enumerate(b):
        if e:
            factors.append(f"ff(r{j + 1},{e})")
    return "*".join(factors) if factors else "1"


def _signed_key_str(key, d: int) -> str:
    names = [f"p{i + 1}" for i in range(d)] + [f"q{j + 1}" for j in range(d)]
    factors = [n if e == 1 else f"{n}^{e}"
               for n, e in zip(names, key) if e]
    return "*".join(factors) if factors else "1"


def _emit(fmt: str, lines: list[str], payload: dict) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _poly_payload(poly: MultiPoly) -> dict:
    return {"d": poly.d, "terms": poly.to_json_terms()}


def _ff_payload(ff) -> dict:
    ok, witnesses = ff.is_nonnegative()
    return {
        "d": ff.d,
        "terms": ff.to_json_terms(),
        "nonnegative": ok,
        "witnesses": [
            {"term": _ff_key_str(k), "coeff": format_rational(v)}
            for k, v in witnesses
        ],
    }


_FUNCTION_FACTORIES = {
    "ch": character_function,
    "ko": kostka_function,
    "jackstar": shifted_jack_function,
    "jackstar-scaled": shifted_jack_scaled_function,
    "schur": shifted_schur_function,
}


def _resolve_alpha(parser, args) -> Fraction | None:
    """Pick the evaluation mode; the alpha = 1 family forces alpha = 1."""
    alpha = getattr(args, "alpha", None)
    if getattr(args, "alpha_symbolic", False) and alpha is not None:
        parser.error("--alpha and --alpha-symbolic are mutually exclusive")
    if args.function == "schur":
        if alpha is None:
            return Fraction(1)
        if alpha != 1:
            parser.error("the shifted Schur family is defined at alpha = 1")
    return alpha


#####################################################################
# jack
#####################################################################

def cmd_jack_expand(args, fmt: str) -> int:
    lam = args.shape
    if sum(lam) > JACK_SIZE_LIMIT and not args.unbounded:
        raise _Limit(f"|shape| > {JACK_SIZE_LIMIT} needs --unbounded")
    mono = jack_monomial_expansion(lam)
    ps = jack_powersum_expansion(lam)
    lines = [f"monomial expansion of the Jack polynomial for shape {_mu_str(lam)}:"]
    mono_terms = []
    for tau in sorted(mono):
        coeff = mono[tau]
        lines.append(f"  m{_mu_str(tau)}: {coeff.to_str()}")
        mono_terms.append({"index": list(tau), "coeff": coeff.to_str()})
    lines.append("power-sum expansion:")
    ps_terms = []
    for tau in sorted(ps):
        coeff = ps[tau]
        lines.append(f"  p{_mu_str(tau)}: {coeff.to_str()}")
        ps_terms.append({"index": list(tau), "coeff": coeff.to_str()})
    _emit(fmt, lines, {
        "command": "jack expand", "shape": list(lam),
        "monomial": mono_terms, "powersum": ps_terms,
    })
    return 0


def cmd_jack_tables(args, fmt: str) -> int:
    if args.max_size > TABLE_SIZE_LIMIT and not args.unbounded:
        raise _Limit(f"--max-size > {TABLE_SIZE_LIMIT} needs --unbounded")
    blocks = []
    lines = []
    for n in range(1, args.max_size + 1):
        parts, chars = character_table(n)
        _, kost = kostka_table(n)
        blocks.append({
            "n": n,
            "partitions": [list(t) for t in parts],
            "character": chars,
            "kostka": kost,
        })
        lines.append(f"n = {n}; rows and columns indexed by "
                     + " ".join(_mu_str(t) for t in parts))
        width = max(len(str(v)) for row in chars + kost for v in row)
        lines.append("character table:")
        lines.extend("  " + " ".join(f"{v:>{width}}" for v in row) for row in chars)
        lines.append("Kostka table:")
        lines.extend("  " + " ".join(f"{v:>{width}}" for v in row) for row in kost)
    _emit(fmt, lines, {"command": "jack tables", "max_size": args.max_size,
                       "tables": blocks})
    return 0


#####################################################################
# shifted
#####################################################################

def cmd_shifted(parser, args, fmt: str) -> int:
    alpha = _resolve_alpha(parser, args)
    f = _FUNCTION_FACTORIES[args.function](args.mu)
    if args.action == "eval":
        if sum(args.lam) > EVAL_SIZE_LIMIT and not args.unbounded:
            raise _Limit(f"|lambda| > {EVAL_SIZE_LIMIT} needs --unbounded")
        value = f(args.lam)
        shown = (value.to_str() if alpha is None
                 else format_rational(value.evaluate(alpha)))
        mode = "symbolic" if alpha is None else format_rational(alpha)
        _emit(fmt, [f"{args.function}{_mu_str(args.mu)} at lambda="
                    f"{_mu_str(args.lam)} [alpha {mode}]: {shown}"],
              {"command": "shifted eval", "function": args.function,
               "mu": list(args.mu), "lam": list(args.lam),
               "alpha": mode, "value": shown})
        return 0
    if sum(args.mu) > RECON_SIZE_LIMIT and not args.unbounded:
        raise _Limit(f"|mu| > {RECON_SIZE_LIMIT} needs --unbounded")
    exp = expand_in_pstar(f, alpha=alpha)
    mode = "symbolic" if alpha is None else format_rational(alpha)
    lines = [f"shifted power-sum expansion of {args.function}{_mu_str(args.mu)} "
             f"[alpha {mode}]:"]
    coeffs = []
    for nu in sorted(exp.coeffs, key=lambda t: (sum(t), t)):
        c = exp.coeffs[nu]
        shown = c.to_str() if alpha is None else format_rational(c.evaluate(alpha))
        lines.append(f"  p*{_mu_str(nu)}: {shown}")
        coeffs.append({"index": list(nu), "coeff": shown})
    _emit(fmt, lines, {"command": "shifted expand", "function": args.function,
                       "mu": list(args.mu), "alpha": mode, "coeffs": coeffs})
    return 0


#####################################################################
# reconstruct
#####################################################################

def cmd_reconstruct(parser, args, fmt: str) -> int:
    alpha = _resolve_alpha(parser, args)
    if not args.unbounded and (sum(args.mu) > RECON_SIZE_LIMIT or args.d > RECON_D_LIMIT):
        raise _Limit(f"|mu| <= {RECON_SIZE_LIMIT} and d <= {RECON_D_LIMIT} "
                     "unless --unbounded")
    f = _FUNCTION_FACTORIES[args.function](args.mu)
    poly = reconstruct_multirect(f, d=args.d, alpha=alpha)
    mode = "symbolic" if alpha is None else format_rational(alpha)
    payload = {
        "command": "reconstruct", "function": args.function,
        "mu": list(args.mu), "d": args.d, "alpha": mode,
        "poly": _poly_payload(poly),
    }
    lines = [f"{args.function}{_mu_str(args.mu)} in {args.d} rectangle "
             f"block(s) [alpha {mode}]:", f"  {poly.to_str()}"]
    code = 0
    if args.ff:
        ff = to_falling_factorial(poly)
        payload["ff"] = _ff_payload(ff)
        ok = payload["ff"]["nonnegative"]
        lines.append("falling-factorial expansion:")
        lines.append(f"  {ff.to_str()}")
        lines.append(f"nonnegative: {'yes' if ok else 'no'}")
        for w in payload["ff"]["witnesses"]:
            lines.append(f"  negative: {w['term']} = {w['coeff']}")
        code = 0 if ok else 1
    _emit(fmt, lines, payload)
    return code


#####################################################################
# stanley
#####################################################################

def cmd_stanley_ch(args, fmt: str) -> int:
    if not args.unbounded and (sum(args.mu) > CONJ_SIZE_LIMIT or args.d > RECON_D_LIMIT):
        raise _Limit(f"|mu| <= {CONJ_SIZE_LIMIT} and d <= {RECON_D_LIMIT} "
                     "unless --unbounded")
    poly = ch1_multirect(args.mu, args.d)
    flip = -1 if sum(args.mu) % 2 else 1
    signed = {k: flip * v for k, v in stanley_signed_coeffs(poly).items()}
    witnesses = [(k, v) for k, v in sorted(signed.items()) if v < 0]
    lines = [f"ch{_mu_str(args.mu)} in {args.d} rectangle block(s) [alpha 1]:",
             f"  {poly.to_str()}",
             "signed coefficients (sign-normalized, second bank negated):"]
    terms = []
    for key in sorted(signed):
        v = signed[key]
        lines.append(f"  {_signed_key_str(key, args.d)}: {format_rational(v)}")
        terms.append({"monomial": list(key), "coeff": format_rational(v)})
    ok = not witnesses
    lines.append(f"nonnegative: {'yes' if ok else 'no'}")
    for k, v in witnesses:
        lines.append(f"  negative: {_signed_key_str(k, args.d)} = {format_rational(v)}")
    _emit(fmt, lines, {
        "command": "stanley ch", "mu": list(args.mu), "d": args.d,
        "poly": _poly_payload(poly), "signed": terms, "nonnegative": ok,
        "witnesses": [{"term": _signed_key_str(k, args.d),
                       "coeff": format_rational(v)} for k, v in witnesses],
    })
    return 0 if ok else 1


def cmd_stanley_verify_b(args, fmt: str) -> int:
    if args.k > B_SCAN_LIMIT and not args.unbounded:
        raise _Limit(f"--k > {B_SCAN_LIMIT} needs --unbounded")
    lines = []
    rows = []
    all_ok = True
    for k in range(1, args.k + 1):
        parts = tuple(set_partitions_stream(k, args.unbounded))
        worst = None
        count = 0
        for mu in partitions_of(k):
            for s in parts:
                for t in parts:
                    v = b_coeff(mu, s, t)
                    count += 1
                    if worst is None or v < worst[0]:
                        worst = (v, mu, s, t)
        # nonnegativity of the tracked minimum certifies the whole range
        ok = worst[0] >= 0
        all_ok = all_ok and ok
        lines.append(f"{'PASS' if ok else 'FAIL'} k={k} cases={count} "
                     f"min={worst[0]}")
        if not ok:
            lines.append(f"  witness: mu={_mu_str(worst[1])} S={worst[2]} T={worst[3]}")
        rows.append({"k": k, "cases": count, "min": worst[0], "pass": ok})
    lines.append(f"verify-b: {'PASS' if all_ok else 'FAIL'}")
    _emit(fmt, lines, {"command": "stanley verify-b", "k": args.k,
                       "results": rows, "pass": all_ok})
    return 0 if all_ok else 1


def cmd_stanley_question(args, fmt: str) -> int:
    best, witness = question_scan(args.k, args.unbounded)
    s, t, u = witness
    lines = [f"minimum signed triple sum on ground set [{args.k}]: {best}",
             f"  witness: S={s} T={t} U={u}",
             "no claim is attached to this scan; negative values are a finding"]
    _emit(fmt, lines, {"command": "stanley question35", "k": args.k,
                       "min": best,
                       "witness": {"s": [list(b) for b in s],
                                   "t": [list(b) for b in t],
                                   "u": [list(b) for b in u]}})
    return 0


#####################################################################
# zonal
#####################################################################

def cmd_zonal_poly(args, fmt: str) -> int:
    if sum(args.mu) > ZONAL_SIZE_CAP + 1 and not args.unbounded:
        raise _Limit(f"|mu| > {ZONAL_SIZE_CAP + 1} needs --unbounded")
    if args.action == "zstar":
        poly = zstar_multirect(args.mu, args.d, args.unbounded)
    elif args.action == "ch2":
        poly = ch2_multirect(args.mu, args.d)
    else:
        poly = ko2_multirect(args.mu, args.d)
    lines = [f"{args.action}{_mu_str(args.mu)} in {args.d} rectangle "
             f"block(s) [alpha 2]:", f"  {poly.to_str()}"]
    _emit(fmt, lines, {"command": f"zonal {args.action}", "mu": list(args.mu),
                       "d": args.d, "poly": _poly_payload(poly)})
    return 0


def cmd_zonal_census(args, fmt: str) -> int:
    if args.k > 4 and not args.unbounded:
        raise _Limit("--k > 4 needs --unbounded")
    lines = [f"pair-type census on 2k = {2 * args.k} points:"]
    rows = []
    all_ok = True
    for nu, count in type_census(args.k):
        expected = factorial(2 * args.k) // (centralizer_size(nu) * 2 ** len(nu))
        ok = count == expected
        all_ok = all_ok and ok
        lines.append(f"  {'ok' if ok else 'MISMATCH'} nu={_mu_str(nu)} "
                     f"pairs={count} formula={expected}")
        rows.append({"nu": list(nu), "pairs": count, "formula": expected,
                     "match": ok})
    lines.append(f"census: {'PASS' if all_ok else 'FAIL'}")
    _emit(fmt, lines, {"command": "zonal census", "k": args.k,
                       "results": rows, "pass": all_ok})
    return 0 if all_ok else 1


def cmd_zonal_b2scan(args, fmt: str) -> int:
    best, witness = b2_scan(args.k, args.unbounded)
    mu, v, w = witness
    lines = [f"minimum spherical-weighted pair coefficient for k={args.k}: "
             f"{format_rational(best)}",
             f"  witness: mu={_mu_str(mu)} S={v} T={w}",
             "exploratory scan; no nonnegativity claim is made here"]
    _emit(fmt, lines, {"command": "zonal b2scan", "k": args.k,
                       "min": format_rational(best),
                       "witness": {"mu": list(mu),
                                   "s": [list(b) for b in v],
                                   "t": [list(b) for b in w]}})
    return 0


#####################################################################
# hooktab
#####################################################################

def _bijection_worker(task):
    lam, kmax = task
    rows = []
    for k in range(1, min(kmax, sum(lam)) + 1):
        hook_total = None
        hooks = 0
        for t in hooktab.hook_tableaux_stream(lam, k):
            p = hooktab.psi(t)
            if hooktab.phi(p) != t or hooktab.weight_permuted(p) != hooktab.weight_hook(t):
                return {"lam": lam, "pass": False,
                        "detail": f"round trip failed at k={k}: {t}"}
            w = hooktab.weight_hook(t)
            hook_total = w if hook_total is None else hook_total + w
            hooks += 1
        perm_total = None
        perms = 0
        for p in hooktab.permuted_tableaux_stream(lam, k):
            t = hooktab.phi(p)
            if hooktab.psi(t) != p:
                return {"lam": lam, "pass": False,
                        "detail": f"reverse round trip failed at k={k}: {p}"}
            w = hooktab.weight_permuted(p)
            perm_total = w if perm_total is None else perm_total + w
            perms += 1
        subset = hooktab.ko_onepart_subsets(k, lam)
        reference = jack_kostka((k,), lam)
        zero = subset - subset
        hook_total = zero if hook_total is None else hook_total
        perm_total = zero if perm_total is None else perm_total
        if not (hook_total == perm_total == subset == reference):
            return {"lam": lam, "pass": False,
                    "detail": (f"weight sums disagree at k={k}: "
                               f"hook={hook_total.to_str()} "
                               f"permuted={perm_total.to_str()} "
                               f"subsets={subset.to_str()} "
                               f"reference={reference.to_str()}")}
        rows.append({"k": k, "hook_tableaux": hooks, "permuted_tableaux": perms,
                     "total": subset.to_str()})
    return {"lam": lam, "pass": True, "rows": rows}


def cmd_hooktab_verify(args, fmt: str) -> int:
    if not args.unbounded and (args.max_size > BIJECTION_SIZE_LIMIT
                               or args.k > BIJECTION_K_LIMIT):
        raise _Limit(f"--max-size <= {BIJECTION_SIZE_LIMIT} and --k <= "
                     f"{BIJECTION_K_LIMIT} unless --unbounded")
    tasks = [(lam, args.k)
             for n in range(1, args.max_size + 1)
             for lam in partitions_of(n)]
    results = _run_tasks(_bijection_worker, tasks, args.jobs)
    lines = []
    all_ok = True
    for res in results:
        if res["pass"]:
            for row in res["rows"]:
                lines.append(f"PASS lam={_mu_str(res['lam'])} k={row['k']} "
                             f"hook={row['hook_tableaux']} "
                             f"permuted={row['permuted_tableaux']} "
                             f"total={row['total']}")
        else:
            all_ok = False
            lines.append(f"FAIL lam={_mu_str(res['lam'])}: {res['detail']}")
    lines.append(f"bijection suite: {'PASS' if all_ok else 'FAIL'}")
    _emit(fmt, lines, {"command": "hooktab verify", "max_size": args.max_size,
                       "k": args.k,
                       "results": [{**r, "lam": list(r["lam"])} for r in results],
                       "pass": all_ok})
    return 0 if all_ok else 1


def cmd_hooktab_ff(args, fmt: str) -> int:
    if not args.unbounded and (args.k > FF_K_LIMIT or args.d > RECON_D_LIMIT):
        raise _Limit(f"--k <= {FF_K_LIMIT} and --d <= {RECON_D_LIMIT} "
                     "unless --unbounded")
    ff = hooktab.ko_onepart_ff(args.k, args.d)
    payload = {"command": "hooktab ff", "k": args.k, "d": args.d,
               "ff": _ff_payload(ff)}
    ok = payload["ff"]["nonnegative"]
    lines = [f"one-row coefficient expansion for k={args.k}, d={args.d}:",
             f"  {ff.to_str()}",
             f"nonnegative: {'yes' if ok else 'no'}"]
    _emit(fmt, lines, payload)
    return 0 if ok else 1


def cmd_hooktab_trace(parser, args, fmt: str) -> int:
    trace: list = []
    if args.direction == "psi":
        if args.shape is None:
            t = hooktab.sample_tableau()
        else:
            if args.marks is None:
                parser.error("--shape needs --marks for --direction psi")
            try:
                t = hooktab.hook_tableau(args.shape, args.marks, args.arrows or ())
            except hooktab.InvalidTableau as exc:
                parser.error(str(exc))
        result = hooktab.psi(t, trace=trace)
        weight = hooktab.weight_hook(t)
    else:
        if args.shape is None:
            p = hooktab.psi(hooktab.sample_tableau())
        else:
            if args.labels is None:
                parser.error("--shape needs --labels for --direction phi")
            try:
                p = hooktab.permuted_tableau(args.shape, args.labels)
            except hooktab.InvalidTableau as exc:
                parser.error(str(exc))
        result = hooktab.phi(p, trace=trace)
        weight = hooktab.weight_permuted(p)
    lines = [f"{args.direction} rewriting trace:"]
    steps = []
    for idx, (case, grid) in enumerate(trace):
        lines.append(f"step {idx}  {case}")
        lines.extend("  " + row for row in grid.splitlines())
        steps.append({"step": idx, "case": case, "state": grid})
    lines.append(f"weight: {weight.to_str()}")
    _emit(fmt, lines, {"command": "hooktab trace", "direction": args.direction,
                       "steps": steps, "weight": weight.to_str()})
    return 0


#####################################################################
# verify-conjecture
#####################################################################

def _conjecture_worker(task):
    mu, d = task
    k = sum(mu)
    polys = reconstruct_many_multirect(
        [kostka_function(mu), shifted_jack_scaled_function(mu)], k, d)
    ko_ff = to_falling_factorial(polys[0])
    js_ff = to_falling_factorial(polys[1])
    ko_ok, ko_wit = ko_ff.is_nonnegative()
    js_ok, js_wit = js_ff.is_nonnegative()
    onerow = None
    if len(mu) == 1:
        onerow = hooktab.ko_onepart_ff(k, d) == ko_ff
    witnesses = ([("ko", key, v) for key, v in ko_wit]
                 + [("jackstar-scaled", key, v) for key, v in js_wit])
    return {"mu": mu, "ko_ok": ko_ok, "js_ok": js_ok,
            "ko_terms": len(ko_ff.terms), "js_terms": len(js_ff.terms),
            "onerow": onerow, "witnesses": witnesses}


def cmd_verify_conjecture(args, fmt: str) -> int:
    ok_limits = ((args.max_size <= CONJ_SIZE_LIMIT and args.d <= CONJ_D_LIMIT)
                 or (args.max_size <= CONJ_D3_SIZE_LIMIT and args.d <= 3))
    if not ok_limits and not args.unbounded:
        raise _Limit(f"--max-size <= {CONJ_SIZE_LIMIT} with --d <= {CONJ_D_LIMIT} "
                     f"(or --max-size <= {CONJ_D3_SIZE_LIMIT} with --d 3) "
                     "unless --unbounded")
    tasks = [(mu, args.d)
             for n in range(1, args.max_size + 1)
             for mu in partitions_of(n)]
    results = _run_tasks(_conjecture_worker, tasks, args.jobs)
    lines = []
    rows = []
    all_ok = True
    for res in results:
        ok = res["ko_ok"] and res["js_ok"] and res["onerow"] is not False
        all_ok = all_ok and ok
        extra = "" if res["onerow"] is None else (
            " onerow=match" if res["onerow"] else " onerow=MISMATCH")
        lines.append(f"{'PASS' if ok else 'FAIL'} mu={_mu_str(res['mu'])} "
                     f"ko[{res['ko_terms']} terms]="
                     f"{'nonneg' if res['ko_ok'] else 'NEGATIVE'} "
                     f"jackstar-scaled[{res['js_terms']} terms]="
                     f"{'nonneg' if res['js_ok'] else 'NEGATIVE'}{extra}")
        for fam, key, v in res["witnesses"]:
            lines.append(f"  negative [{fam}]: {_ff_key_str(key)} = "
                         f"{format_rational(v)}")
        rows.append({"mu": list(res["mu"]),
                     "ko_nonnegative": res["ko_ok"],
                     "jackstar_scaled_nonnegative": res["js_ok"],
                     "onerow_ff_match": res["onerow"],
                     "witnesses": [{"family": fam, "term": _ff_key_str(key),
                                    "coeff": format_rational(v)}
                                   for fam, key, v in res["witnesses"]]})
    lines.append(f"verify-conjecture: {'PASS' if all_ok else 'FAIL'} "
                 f"({len(results)} partitions, d={args.d})")
    _emit(fmt, lines, {"command": "verify-conjecture",
                       "max_size": args.max_size, "d": args.d,
                       "alpha": "symbolic", "results": rows, "pass": all_ok})
    return 0 if all_ok else 1


#####################################################################
# crossval
#####################################################################

def _mus_up_to(limit: int):
    return [mu for n in range(1, limit + 1) for mu in partitions_of(n)]


def _crossval_worker(task):
    name, max_size, d = task
    fails: list[str] = []
    cases = 0
    if name == "schur-sum-vs-reconstruction":
        from .stanley import shifted_schur_multirect
        for mu in _mus_up_to(max_size):
            cases += 1
            direct = shifted_schur_multirect(mu, d)
            recon = reconstruct_multirect(shifted_schur_function(mu), d=d,
                                          alpha=Fraction(1))
            if direct != recon:
                fails.append(f"mu={_mu_str(mu)}")
    elif name == "ko-sum-vs-reconstruction":
        from .stanley import ko_multirect_sym
        for mu in _mus_up_to(max_size):
            cases += 1
            direct = ko_multirect_sym(mu, d)
            recon = reconstruct_multirect(kostka_function(mu), d=d,
                                          alpha=Fraction(1))
            if direct != recon:
                fails.append(f"mu={_mu_str(mu)}")
    elif name == "ch-grid-vs-direct":
        one = Fraction(1)
        for mu in _mus_up_to(min(max_size, ZONAL_SIZE_CAP)):
            poly = ch1_multirect(mu, d)
            f = character_function(mu)
            for m in integer_grid(d, 2):
                lam = to_partition(m)
                if sum(lam) > 8:
                    continue
                cases += 1
                if poly.evaluate(m.p, m.r).evaluate(one) != f(lam).evaluate(one):
                    fails.append(f"mu={_mu_str(mu)} grid={m}")
    elif name == "ch2-vs-reconstruction":
        two = Fraction(2)
        for mu in _mus_up_to(min(max_size, ZONAL_SIZE_CAP)):
            cases += 1
            if ch2_multirect(mu, d) != reconstruct_multirect(
                    character_function(mu), d=d, alpha=two):
                fails.append(f"mu={_mu_str(mu)}")
    elif name == "zstar-vs-reconstruction":
        two = Fraction(2)
        for mu in _mus_up_to(min(max_size, ZONAL_SIZE_CAP)):
            cases += 1
            if zstar_multirect(mu, d) != reconstruct_multirect(
                    shifted_jack_function(mu), d=d, alpha=two):
                fails.append(f"mu={_mu_str(mu)}")
    elif name == "ko2-vs-reconstruction":
        two = Fraction(2)
        for mu in _mus_up_to(min(max_size, ZONAL_SIZE_CAP)):
            cases += 1
            if ko2_multirect(mu, d) != reconstruct_multirect(
                    kostka_function(mu), d=d, alpha=two):
                fails.append(f"mu={_mu_str(mu)}")
    elif name == "pair-type-census":
        for k in range(1, min(max_size + 1, 4) + 1):
            for nu, count in type_census(k):
                cases += 1
                if count != factorial(2 * k) // (centralizer_size(nu) * 2 ** len(nu)):
                    fails.append(f"k={k} nu={_mu_str(nu)}")
    elif name == "onerow-four-way":
        for n in range(1, min(max_size + 3, 6) + 1):
            for lam in partitions_of(n):
                for k in range(1, min(4, n) + 1):
                    cases += 1
                    hsum = hooktab.ko_onepart_tableaux(k, lam, "hook")
                    psum = hooktab.ko_onepart_tableaux(k, lam, "permuted")
                    ssum = hooktab.ko_onepart_subsets(k, lam)
                    if not (hsum == psum == ssum == jack_kostka((k,), lam)):
                        fails.append(f"lam={_mu_str(lam)} k={k}")
    else:
        raise ValueError(f"unknown check {name}")
    return {"name": name, "cases": cases, "fails": fails}


_CROSSVAL_CHECKS = (
    "schur-sum-vs-reconstruction",
    "ko-sum-vs-reconstruction",
    "ch-grid-vs-direct",
    "ch2-vs-reconstruction",
    "zstar-vs-reconstruction",
    "ko2-vs-reconstruction",
    "pair-type-census",
    "onerow-four-way",
)


def cmd_crossval(args, fmt: str) -> int:
    if not args.unbounded and (args.max_size > CROSSVAL_SIZE_LIMIT
                               or args.d > CROSSVAL_D_LIMIT):
        raise _Limit(f"--max-size <= {CROSSVAL_SIZE_LIMIT} and --d <= "
                     f"{CROSSVAL_D_LIMIT} unless --unbounded")
    if args.perturb:
        return _crossval_perturb(args, fmt)
    if args.d == 0:
        lines = [f"PASS {name} (vacuous at d=0)" for name in _CROSSVAL_CHECKS]
        lines.append("crossval: PASS")
        _emit(fmt, lines, {"command": "crossval", "max_size": args.max_size,
                           "d": 0, "checks": [{"name": n, "cases": 0,
                                               "pass": True, "fails": []}
                                              for n in _CROSSVAL_CHECKS],
                           "pass": True})
        return 0
    tasks = [(name, args.max_size, args.d) for name in _CROSSVAL_CHECKS]
    results = _run_tasks(_crossval_worker, tasks, args.jobs)
    lines = []
    all_ok = True
    for res in results:
        ok = not res["fails"]
        all_ok = all_ok and ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {res['name']} "
                     f"(cases={res['cases']})")
        lines.extend(f"  mismatch: {w}" for w in res["fails"])
    lines.append(f"crossval: {'PASS' if all_ok else 'FAIL'}")
    _emit(fmt, lines, {"command": "crossval", "max_size": args.max_size,
                       "d": args.d,
                       "checks": [{"name": r["name"], "cases": r["cases"],
                                   "pass": not r["fails"], "fails": r["fails"]}
                                  for r in results],
                       "pass": all_ok})
    return 0 if all_ok else 1


def _crossval_perturb(args, fmt: str) -> int:
    """Self-test: a deliberately corrupted route must be reported."""
    from .stanley import shifted_schur_multirect
    mu = (2,)
    d = max(args.d, 1)
    direct = shifted_schur_multirect(mu, d)
    recon = reconstruct_multirect(shifted_schur_function(mu), d=d,
                                  alpha=Fraction(1))
    key = direct.canonical_terms()[0][0]
    corrupted = direct + MultiPoly(d, {key: AlphaFraction.const(Fraction(1))})
    detected = corrupted != recon
    lines = [f"injected +1 on one coefficient of schur{_mu_str(mu)} (d={d})",
             f"{'PASS' if detected else 'FAIL'} perturbation-detected"]
    _emit(fmt, lines, {"command": "crossval", "perturb": True, "d": d,
                       "mu": list(mu), "detected": detected,
                       "pass": detected})
    return 0 if detected else 1


#####################################################################
# plumbing
#####################################################################

class _Limit(Exception):
    """Raised when a command exceeds its default bounds without --unbounded."""


def _run_tasks(worker, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    # map() keeps result order aligned with the deterministic task list,
    # so parallel output is byte-identical to the serial one.
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        return pool.map(worker, tasks)


def _dispatch(parser: argparse.ArgumentParser, args) -> int:
    cmd = args.command
    if cmd == "jack":
        fmt = _resolve_format(args, "json" if args.action == "tables" else "text")
        return (cmd_jack_expand if args.action == "expand"
                else cmd_jack_tables)(args, fmt)
    if cmd == "shifted":
        return cmd_shifted(parser, args, _resolve_format(args, "text"))
    if cmd == "reconstruct":
        return cmd_reconstruct(parser, args, _resolve_format(args, "json"))
    if cmd == "stanley":
        fmt = _resolve_format(args, "text")
        if args.action == "ch":
            return cmd_stanley_ch(args, fmt)
        if args.action == "verify-b":
            return cmd_stanley_verify_b(args, fmt)
        return cmd_stanley_question(args, fmt)
    if cmd == "zonal":
        fmt = _resolve_format(args, "text")
        if args.action in ("zstar", "ch2", "ko2"):
            return cmd_zonal_poly(args, fmt)
        if args.action == "census":
            return cmd_zonal_census(args, fmt)
        return cmd_zonal_b2scan(args, fmt)
    if cmd == "hooktab":
        fmt = _resolve_format(args, "text")
        if args.action == "verify":
            return cmd_hooktab_verify(args, fmt)
        if args.action == "ff":
            return cmd_hooktab_ff(args, fmt)
        return cmd_hooktab_trace(parser, args, fmt)
    if cmd == "verify-conjecture":
        return cmd_verify_conjecture(args, _resolve_format(args, "text"))
    if cmd == "crossval":
        return cmd_crossval(args, _resolve_format(args, "text"))
    parser.error(f"unknown command {cmd!r}")
    return 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(parser, args)
    except _Limit as exc:
        parser.error(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
