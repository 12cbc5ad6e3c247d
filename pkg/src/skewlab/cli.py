"""Command-line interface: ``skewlab <command> --tower SPEC [args]``.

Exit codes: 0 success, 1 failed self-test, 2 parse error, 3 domain error,
4 inconclusive.  Errors go to stderr as ``error[CODE]: message``.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .checks import CHECKS, F4, check_worked_example
from .errors import Inconclusive, ParseError, SkewlabError
from .petit import PetitAlgebra, diagnostics, eigenring, nucleus, t_power_in_nucr
from .reducibility import certify_irreducible, decide, factorize
from .skew_poly import mclm, s_gcrd, s_lclm, s_left_divmod, s_mul, s_right_divmod
from .text import format_K, format_tower, parse_skew, parse_tower

DEFAULT_TOWER = F4


@dataclass
class RunConfig:
    tower: str = DEFAULT_TOWER
    format: str = "text"
    seed: int = 0


def _emit(cfg, data, text_lines):
    if cfg.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly(args, tower, name="f"):
    return parse_skew(tower, getattr(args, name))


def cmd_mul(cfg, tower, args):
    r = s_mul(_poly(args, tower, "a"), _poly(args, tower, "b"))
    _emit(cfg, {"product": str(r)}, [str(r)])


def cmd_divmod(cfg, tower, args):
    a, b = _poly(args, tower, "a"), _poly(args, tower, "b")
    q, r = (s_right_divmod if args.side == "right" else s_left_divmod)(a, b)
    _emit(cfg, {"side": args.side, "q": str(q), "r": str(r)}, [f"q = {q}", f"r = {r}"])


def cmd_gcrd(cfg, tower, args):
    d = s_gcrd(_poly(args, tower, "a"), _poly(args, tower, "b"))
    _emit(cfg, {"gcrd": str(d)}, [str(d)])


def cmd_lclm(cfg, tower, args):
    d = s_lclm(_poly(args, tower, "a"), _poly(args, tower, "b"))
    _emit(cfg, {"lclm": str(d)}, [str(d)])


def cmd_mclm(cfg, tower, args):
    res = mclm(_poly(args, tower))
    data = {"hhat": str(res.hhat), "h": str(res.h), "cofactor": str(res.cofactor), "t_valuation": res.t_valuation}
    _emit(cfg, data, [f"{k} = {data[k]}" for k in ("hhat", "h", "cofactor", "t_valuation")])


def cmd_nucleus(cfg, tower, args):
    rep = nucleus(PetitAlgebra(_poly(args, tower)))
    basis = [format_K(tower, b) for b in rep.subfield.basis]
    data = {"d": rep.d, "degree_over_F": rep.degree_over_F, "basis": basis}
    _emit(cfg, data, [f"d = {rep.d}", f"degree_over_F = {rep.degree_over_F}", "basis = " + ", ".join(basis)])


def cmd_eigenring(cfg, tower, args):
    A = PetitAlgebra(_poly(args, tower))
    l = None
    if args.with_factorization:
        l = factorize(A.f).l
    rep = diagnostics(A, l=l) if A.f.coeffs[0] else eigenring(A)
    data = rep.to_dict()
    lines = []
    for k in ("f", "dim", "basis", "hhat", "hhat_irreducible", "deg_h", "s", "k", "l", "is_division"):
        v = data[k]
        lines.append(f"{k} = {', '.join(v) if isinstance(v, list) else v}")
    for name, ok in data["checks"].items():
        lines.append(f"check {name} = {ok}")
    _emit(cfg, data, lines)


def cmd_tpow(cfg, tower, args):
    ok = t_power_in_nucr(PetitAlgebra(_poly(args, tower)), args.k)
    _emit(cfg, {"k": args.k, "in_nucr": ok}, [str(ok).lower()])


def cmd_decide(cfg, tower, args):
    v = decide(_poly(args, tower), literal_step3=args.literal_step3, certify=args.certify)
    _emit(cfg, v.to_dict(), [str(v)])


def cmd_certify(cfg, tower, args):
    c = certify_irreducible(_poly(args, tower))
    if c is None:
        _emit(cfg, {"certificate": None}, ["NONE"])
    else:
        _emit(cfg, {"certificate": c.kind, "detail": c.detail}, [f"IRREDUCIBLE {c.kind} {c.detail}".rstrip()])


def cmd_factor(cfg, tower, args):
    fa = factorize(_poly(args, tower))
    parts = [f"({g})" for g in fa.factors]
    if fa.t_valuation:
        parts.append("t" if fa.t_valuation == 1 else f"t^{fa.t_valuation}")
    lines = ["*".join(parts), f"l = {fa.l}"]
    lines += [f"{g}: {c.kind}" for g, c in zip(fa.factors, fa.certificates)]
    _emit(cfg, fa.to_dict(), lines)


def cmd_selftest(cfg, tower, args):
    scale = 1.0 if args.level == "full" else 0.2
    results = [chk(seed=cfg.seed, scale=scale) for chk in CHECKS]
    data = {str(r.number): {"passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results}
    _emit(cfg, data, [r.line() for r in results])
    return 0 if all(r.passed for r in results) else 1


def cmd_gen_fixtures(cfg, tower, args):
    """Worked-example fixtures, recomputed and oracle-checked before writing."""
    if not check_worked_example().passed:
        raise SkewlabError("worked example does not match the oracle")
    rows = []
    for text in args.polys or ["t^2+g", "t^2+(g+1)*t+g", "t^2+t+1", "t^2+1", "t^4+1", "t^2+g*t"]:
        f = parse_skew(tower, text)
        res = mclm(f)
        fa = factorize(f)
        row = {"f": str(f), "hhat": str(res.hhat), "h": str(res.h), "factors": [str(g) for g in fa.factors]}
        row["t_valuation"] = fa.t_valuation
        if f.degree >= 2:
            row["decide"] = str(decide(f, certify=True))
        rows.append(row)
    blob = json.dumps({"tower": format_tower(tower), "fixtures": rows}, sort_keys=True, indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")
    else:
        print(blob)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tower", default=DEFAULT_TOWER, help="tower spec, e.g. 'GF(2)^2/y^2+y+1'")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="skewlab", description="Arithmetic in K[t; sigma] over finite fields.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, nargs=("f",), help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for a in nargs:
            sp.add_argument(a)
        sp.set_defaults(fn=fn)
        return sp

    add("mul", cmd_mul, ("a", "b"), "product a*b")
    add("divmod", cmd_divmod, ("a", "b"), "division with remainder").add_argument(
        "--side", choices=("right", "left"), default="right"
    )
    add("gcrd", cmd_gcrd, ("a", "b"), "greatest common right divisor")
    add("lclm", cmd_lclm, ("a", "b"), "least common left multiple")
    add("mclm", cmd_mclm, help="minimal central left multiple")
    add("nucleus", cmd_nucleus, help="nucleus of S_f")
    add("eigenring", cmd_eigenring, help="right nucleus of S_f").add_argument(
        "--with-factorization", action="store_true", help="factor f to fill in l and k"
    )
    add("tpow", cmd_tpow, help="is t^k in the right nucleus").add_argument("--k", type=int, required=True)
    sp = add("decide", cmd_decide, help="four-step reducibility test")
    sp.add_argument("--literal-step3", action="store_true", help="keep the unsound Fix(sigma^c) = L branch")
    sp.add_argument("--certify", action="store_true", help="upgrade STOP to a certificate when possible")
    add("certify", cmd_certify, help="irreducibility certificate via hhat")
    add("factor", cmd_factor, help="complete factorization")
    add("selftest", cmd_selftest, (), "run the acceptance checks").add_argument(
        "--level", choices=("fast", "full"), default="fast"
    )
    sp = add("gen-fixtures", cmd_gen_fixtures, (), "write oracle-checked fixtures as JSON")
    sp.add_argument("polys", nargs="*")
    sp.add_argument("--out")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.tower, args.format, args.seed)
    try:
        tower = parse_tower(cfg.tower)
        rc = args.fn(cfg, tower, args)
    except ParseError as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        return 2
    except Inconclusive as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        return 4
    except SkewlabError as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        return 3
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
