"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (the error class name is
reported), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from fractions import Fraction

from . import braiding, coset, fusion, structure, verma
from .errors import InvalidT, NonGenericMode, ParseError, VirasoroError
from .exactalg import Scalar, parse_scalar
from .verma import CentralCharge, KacLabel


_FLAT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def _dump(envelope: dict) -> str:
    # indent objects but keep integer lists on one line
    text = json.dumps(envelope, indent=2)
    return _FLAT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)


def _scalar(s: Scalar, var: str = "t") -> dict:
    out = s.to_json()
    out["text"] = s.format(var)
    return out


def _label(text: str) -> KacLabel:
    try:
        r, s = (int(p) for p in text.split(","))
        return KacLabel(r, s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a label R,S with R,S >= 1, got {text!r}") from exc


def _t_param(text: str) -> CentralCharge:
    if text == "symbolic":
        return CentralCharge.symbolic()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"--t expects 'symbolic' or a rational p/q, got {text!r}") from exc
    if value == 0:
        raise InvalidT("t = 0 does not define a central charge")
    return CentralCharge.rational(value)


def _positive(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


# -- commands: each returns (payload, text lines) ----------------------------


def cmd_kac(args, cc):
    window = args.window or 4
    rows = []
    lines = []
    for r in range(1, window + 1):
        for s in range(1, window + 1):
            h = verma.kac_h((r, s), cc)
            rows.append({"label": [r, s], "h": _scalar(h)})
            lines.append(f"h_{{{r},{s}}} = {h}")
    return {"window": window, "c": _scalar(cc.c), "table": rows}, [f"c = {cc.c}"] + lines


def cmd_singvec(args, cc):
    label = KacLabel(args.r, args.s)
    v = verma.singular_vector(label, cc)
    terms = [
        {"partition": list(p), "monomial": verma.monomial_name(p), "coeff": _scalar(c)}
        for p, c in v.terms()
    ]
    lines = [f"singular vector of V_{{{label.r},{label.s}}} at level {v.level}"]
    lines += [f"  {c}  {verma.monomial_name(p)}" for p, c in v.terms()]
    payload = {"label": [label.r, label.s], "level": v.level, "h": _scalar(verma.kac_h(label, cc)), "terms": terms}
    return payload, lines


def cmd_detect(args, cc):
    h = parse_scalar(
        args.h,
        names={"t": cc.t, "c": cc.c},
        functions={"h": lambda r, s: verma.kac_weight(r, s, cc.t)},
    )
    levels = verma.detect_singular_levels(h, cc, args.max)
    payload = {"h": _scalar(h), "levels": [{"level": n, "dim": d} for n, d in levels]}
    lines = [f"h = {h}"] + [f"level {n}: {d}" for n, d in levels]
    return payload, lines


def cmd_embed(args, cc):
    label = KacLabel(args.r, args.s)
    shape = structure.embedding_shape(label, cc)
    return {"label": [label.r, label.s], "shape": shape.value}, [f"V_{{{label.r},{label.s}}}: {shape.value}"]


def cmd_c1dim(args, cc):
    label = args.label
    profile = structure.c1_quotient_profile(label, cc)
    payload = {"label": [label.r, label.s], "dim": sum(profile), "profile": profile}
    return payload, [f"dim C1-quotient of L_{{{label.r},{label.s}}} = {sum(profile)}", f"per level: {profile}"]


def cmd_fuse(args, cc):
    a, b = args.a, args.b
    dec = fusion.fuse(a, b, cc)
    summands = [{"label": [lab.r, lab.s], "multiplicity": m} for lab, m in dec.items()]
    text = " + ".join(f"L_{{{lab.r},{lab.s}}}" if m == 1 else f"{m} L_{{{lab.r},{lab.s}}}" for lab, m in dec.items())
    payload = {"factors": [[a.r, a.s], [b.r, b.s]], "summands": summands, "count": dec.total()}
    return payload, [f"L_{{{a.r},{a.s}}} x L_{{{b.r},{b.s}}} = {text}"]


def cmd_monodromy(args, cc):
    T = args.label
    partners = [args.x] if args.x else list(braiding.GENERATORS)
    entries = []
    lines = [f"twist exponent of L_{{{T.r},{T.s}}}: {braiding.twist_exponent(T, cc)}"]
    for X in partners:
        for Z, e in braiding.monodromy_exponents(T, X, cc):
            entries.append({"X": [X.r, X.s], "summand": [Z.r, Z.s], "exponent": _scalar(e.value), "trivial": e.is_trivial()})
            lines.append(f"X = L_{{{X.r},{X.s}}}  on L_{{{Z.r},{Z.s}}}: {e.value}")
    payload = {"T": [T.r, T.s], "twist": _scalar(braiding.twist_exponent(T, cc).value), "entries": entries}
    return payload, lines


def cmd_scan(args, cc):
    window = args.window or 4
    rep = braiding.nondegeneracy_scan(window, cc)
    witnesses = []
    for lab in sorted(rep.witnesses):
        w = rep.witnesses[lab]
        witnesses.append({
            "label": [lab.r, lab.s],
            "X": [w.X.r, w.X.s],
            "summand": [w.summand.r, w.summand.s],
            "exponent": _scalar(w.exponent.value),
            "ratio": _scalar(w.ratio.value) if w.ratio is not None else None,
        })
    payload = {
        "window": window,
        "nondegenerate": rep.ok,
        "transparent": [[lab.r, lab.s] for lab in rep.transparent],
        "witnesses": witnesses,
    }
    lines = [f"transparent: {', '.join(str(lab) for lab in rep.transparent)}", f"non-degenerate: {rep.ok}"]
    for w in witnesses:
        ratio = w["ratio"]["text"] if w["ratio"] else "-"
        lines.append(
            f"  L_{{{w['label'][0]},{w['label'][1]}}}: X = L_{{{w['X'][0]},{w['X'][1]}}}, "
            f"summand L_{{{w['summand'][0]},{w['summand'][1]}}}, exponent {w['exponent']['text']}, ratio {ratio}"
        )
    return payload, lines


def cmd_coset(args, cc):
    if not cc.is_symbolic:
        raise NonGenericMode(f"coset identities are verified at generic level only, not {cc.mode}")
    order = args.order if args.order is not None else 8
    rep = coset.verify_coset(args.lam, args.mu, order)
    sectors = []
    lines = [f"t = {coset.coset_t_param().format('l')}", f"passed: {rep.ok}"]
    for v in rep.verdicts:
        sectors.append({
            "nu": v.nu,
            "exponent": _scalar(v.exponent, "l"),
            "exponent_ok": v.exponent_ok,
            "match_order": v.match_order,
            "branching": v.branching,
            "note": v.note,
        })
        lines.append(
            f"  nu={v.nu}: exponent {v.exponent.format('l')}, ok={v.passed(order)}, "
            f"branching {v.branching}" + (f" ({v.note})" if v.note else "")
        )
    payload = {
        "lambda": args.lam,
        "mu": args.mu,
        "order": order,
        "t": _scalar(coset.coset_t_param(), "l"),
        "ok": rep.ok,
        "sectors": sectors,
    }
    return payload, lines


def cmd_verify_ring(args, cc):
    window = args.window or 3
    rep = fusion.verify_ring(window, cc)
    payload = {"window": window, "ok": rep.ok, "checked": rep.checked, "failure": rep.failure}
    lines = [f"ring axioms on window {window}: {'ok' if rep.ok else 'FAILED'}"]
    lines += [f"  {k}: {n}" for k, n in rep.checked.items()]
    if rep.failure:
        lines.append(f"  first failure: {rep.failure}")
    return payload, lines


# -- parser --------------------------------------------------------------------


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--t", dest="t", default=default if suppress else "symbolic",
                        help="'symbolic' (default) or a rational p/q")
    parser.add_argument("--json", action="store_true", default=default if suppress else False,
                        help="machine-readable output")
    parser.add_argument("--order", type=_positive, default=default)
    parser.add_argument("--window", type=int, default=default)


def _formatter(prog):
    # fixed width so usage text does not depend on the terminal
    return argparse.HelpFormatter(prog, width=88)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virfusion", description=__doc__.splitlines()[0], formatter_class=_formatter,
        epilog="exit status: 0 on success, 1 on a domain error (its name is printed), 2 on a usage or parse error",
    )
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, formatter_class=_formatter)
        _common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    add("kac", cmd_kac, "table of h_{r,s} over a window")
    p = add("singvec", cmd_singvec, "singular vector of V_{r,s}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p = add("detect", cmd_detect, "singular-vector dimensions by level")
    p.add_argument("--h", required=True, help="weight expression, e.g. '(3*t-2)/4' or 'h(2,1)'")
    p.add_argument("--max", type=int, default=4)
    p = add("embed", cmd_embed, "embedding-diagram shape")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p = add("c1dim", cmd_c1dim, "dimension of the C_1-quotient of L_{r,s}")
    p.add_argument("label", type=_label)
    p = add("fuse", cmd_fuse, "fusion product of two simples")
    p.add_argument("a", type=_label)
    p.add_argument("b", type=_label)
    p = add("monodromy", cmd_monodromy, "monodromy exponents")
    p.add_argument("label", type=_label)
    p.add_argument("--x", type=_label, default=None)
    add("scan", cmd_scan, "transparency scan")
    p = add("coset", cmd_coset, "coset character identity")
    p.add_argument("--lambda", dest="lam", type=int, choices=(0, 1), required=True)
    p.add_argument("--mu", type=_positive, required=True)
    add("verify-ring", cmd_verify_ring, "fusion-ring axioms on a window")
    return parser


def _join_signed_t(argv: list[str]) -> list[str]:
    # argparse would read "--t -3/2" as two options
    out = []
    it = iter(argv)
    for a in it:
        if a == "--t":
            nxt = next(it, None)
            if nxt is not None and nxt[:1] == "-" and nxt[1:2].isdigit():
                out.append(f"--t={nxt}")
                continue
            out.append(a)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(a)
    return out


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(_join_signed_t(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    except InvalidT as exc:
        print(f"error: {exc.name}: {exc}", file=err)
        return 1
    cc = args.t if isinstance(args.t, CentralCharge) else None
    try:
        if cc is None:
            cc = _t_param(args.t)
        payload, lines = args.func(args, cc)
    except ParseError as exc:
        parser.print_usage(err)
        print(f"virfusion: error: {exc.name}: {exc}", file=err)
        return 2
    except VirasoroError as exc:
        if args.json:
            envelope = {
                "command": " ".join(argv),
                "mode": cc.mode if cc else "invalid",
                "status": exc.name,
                "payload": {"message": str(exc)},
            }
            print(_dump(envelope), file=out)
        else:
            print(f"error: {exc.name}: {exc}", file=err)
        return 1
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.print_usage(err)
        print(f"virfusion: error: {exc}", file=err)
        return 2
    if args.json:
        envelope = {"command": " ".join(argv), "mode": cc.mode, "status": "ok", "payload": payload}
        print(_dump(envelope), file=out)
    else:
        print(f"# {args.command} ({cc.mode})", file=out)
        for line in lines:
            print(line, file=out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
