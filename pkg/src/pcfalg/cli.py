"""Command-line front end."""
from __future__ import annotations

import argparse
import json
import sys

from . import cfcore, grouptheory, pcf
from .cfcore import Fcf
from .convergence import classify, float_oracle, report_to_dict
from .exactnum import EmbeddingError, TowerMismatch, div, render
from .interval import decimal_str
from .matrix2 import mat_of_fcf, quad, roots
from .parsing import ParseError, parse_cf, parse_elem

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _digits(args) -> int:
    if args.precision is None:
        return 30
    return max(1, int(args.precision * 0.30103))


def _point(pt, digits):
    if pt is None:
        return None
    if pt.is_inf:
        return {"exact": "inf", "decimal": "inf"}
    return {"exact": render(pt.value), "decimal": decimal_str(pt.value, digits)}


def _point_text(d) -> str:
    if d is None:
        return "none"
    if d["exact"] == d["decimal"]:
        return d["exact"]
    return f"{d['exact']} ~ {d['decimal']}"


def _numeric_value(o) -> str:
    if o.box is None:
        return "undetermined"
    z = complex(o.box)
    if o.chart == "reciprocal":
        if z == 0:
            return "inf"
        z = 1 / z
    return repr(z.real) if z.imag == 0 else repr(z)


def _need_pcf(x, what):
    if not isinstance(x, pcf.Pcf):
        raise UsageError(f"{what} needs a periodic continued fraction")
    return x


# ---------------------------------------------------------------------------
# subcommands; each returns (json-able data, text)


def cmd_reduce(args, cfs):
    (x,) = cfs
    if isinstance(x, Fcf):
        out = str(cfcore.reduce(x))
    else:
        out = str(pcf.normal_form(x))
    return {"input": str(x), "normal_form": out}, out


def cmd_star(args, cfs):
    x, y = cfs
    if isinstance(x, Fcf) and isinstance(y, Fcf):
        out = str(cfcore.star(cfcore.reduce(x), cfcore.reduce(y)))
    elif isinstance(x, pcf.Pcf) and isinstance(y, pcf.Pcf):
        out = str(pcf.star(x, y))
    else:
        raise UsageError("star needs two finite or two periodic continued fractions")
    return {"product": out}, out


def cmd_inverse(args, cfs):
    (x,) = cfs
    out = str(cfcore.inverse(x) if isinstance(x, Fcf) else pcf.inverse(x))
    return {"inverse": out}, out


def _matrix_of(x):
    return mat_of_fcf(x) if isinstance(x, Fcf) else pcf.e_matrix(x)


def cmd_matrix(args, cfs):
    (x,) = cfs
    m = _matrix_of(x)
    return {"matrix": str(m), "det": render(m.det())}, str(m)


def cmd_quad(args, cfs):
    (x,) = cfs
    q = quad(_matrix_of(x))
    return {"quad": str(q)}, str(q)


def cmd_roots(args, cfs):
    (x,) = cfs
    rp = roots(quad(_matrix_of(x)))
    digits = _digits(args)
    pts = [_point(r, digits) for r in rp.roots]
    if rp.kind == "zero_poly":
        text = "every point is a root"
    else:
        text = "\n".join(_point_text(p) for p in pts)
    return {"kind": rp.kind, "roots": pts}, text


def _report(args, cfs):
    (x,) = cfs
    rep = classify(_need_pcf(x, "classification"))
    return rep, report_to_dict(rep, _digits(args))


def cmd_classify(args, cfs):
    rep, data = _report(args, cfs)
    lines = [f"{data['behavior']} ({data['case_tag']})"]
    if data["limit"] is not None:
        lines.append("limit " + _point_text(data["limit"]))
    if data["heavy"]:
        lines.append("heavy residues " + ",".join(str(j) for j in data["heavy"]))
    return data, "\n".join(lines)


def cmd_limits(args, cfs):
    rep, data = _report(args, cfs)
    lines = [f"{data['behavior']} ({data['case_tag']})"]
    for r in data["residues"]:
        mark = " heavy" if r["heavy"] else ""
        lim = "divergent" if r["limit"] is None else _point_text(r["limit"])
        lines.append(f"P_{r['j']}: {lim}{mark}")
    if data["majority"] is not None:
        m = data["majority"]
        lines.append(f"majority {m['agree_count']}/{m['total']}")
    if args.periods:
        bits = args.precision or 128
        orc = float_oracle(rep.pcf, args.periods, bits)
        data["numeric"] = []
        for o in orc:
            v = _numeric_value(o)
            data["numeric"].append({"j": o.j, "value": v, "last_step": o.change})
            lines.append(f"numeric P_{o.j}: {v}")
    return data, "\n".join(lines)


def cmd_chars(args, cfs):
    (x,) = cfs
    p = _need_pcf(x, "chars")
    chars = pcf.characters(p)
    det = pcf.e_matrix(p).det()
    digits = _digits(args)
    items = []
    for c in chars:
        items.append(
            {
                "root": _point(c.root, digits),
                "value": render(c.value),
                "decimal": decimal_str(c.value, digits),
            }
        )
    prod = chars[0].value * chars[1].value
    data = {
        "characters": items,
        "product": render(prod),
        "det": render(det),
        "units": chars[0].is_unit_norm,
    }
    lines = [f"{_point_text(i['root'])}: {i['value']} ~ {i['decimal']}" for i in items]
    lines.append(f"product {render(prod)} = det {render(det)}: {'units' if data['units'] else 'not units'}")
    return data, "\n".join(lines)


def cmd_equiv(args, cfs):
    x, y = cfs
    if isinstance(x, Fcf) and isinstance(y, Fcf):
        same = cfcore.reduce(x) == cfcore.reduce(y)
    elif isinstance(x, pcf.Pcf) and isinstance(y, pcf.Pcf):
        same = pcf.equivalent(x, y)
    else:
        raise UsageError("equiv needs two finite or two periodic continued fractions")
    return {"equivalent": same}, "equal" if same else "not equal"


def cmd_eval(args, cfs):
    (x,) = cfs
    digits = _digits(args)
    if isinstance(x, Fcf):
        pairs = cfcore.convergents(x)
    else:
        count = args.count or (x.N + x.k * (args.periods or 4))
        pairs = cfcore.convergents(Fcf(x.prefix(count)))
    vals = []
    for n, (pv, qv) in enumerate(pairs, start=1):
        if args.count and n > args.count:
            break
        if qv == 0:
            vals.append({"n": n, "exact": "inf", "decimal": "inf"})
        else:
            v = div(pv, qv)
            vals.append({"n": n, "exact": render(v), "decimal": decimal_str(v, digits)})
    return {"convergents": vals}, "\n".join(f"C_{v['n']} = {v['decimal']}" for v in vals)


def cmd_kernel_check(args, cfs):
    if args.amalgam:
        checks = grouptheory.amalgam_relations()
        ok = all(checks.values())
        text = "\n".join(f"{'ok  ' if v else 'FAIL'} {k}" for k, v in checks.items())
        return {"amalgam": checks, "ok": ok}, text
    if args.exceptions:
        rep = grouptheory.exception_report()
        for r in rep:
            r["norm"] = render(r["norm"])
        text = "\n".join(f"{r['x']} ({r['variant']}): {r['verdict']}" for r in rep)
        return {"exceptions": rep}, text
    if args.variant:
        if args.x is None:
            raise UsageError("--variant needs --x")
        alpha = parse_elem(args.alpha) if args.alpha else None
        cert = grouptheory.six_term_kernel(parse_elem(args.x), args.variant, alpha)
    elif cfs:
        (w,) = cfs
        if not isinstance(w, Fcf):
            raise UsageError("kernel-check needs a finite word")
        cert = grouptheory.certify(w)
    else:
        raise UsageError("kernel-check needs a word, --variant, --amalgam or --exceptions")
    d = cert.to_dict()
    return d, f"{d['word']} -> {d['image']}: {d['verdict']}"


COMMANDS = {
    "reduce": (cmd_reduce, 1),
    "star": (cmd_star, 2),
    "inverse": (cmd_inverse, 1),
    "matrix": (cmd_matrix, 1),
    "quad": (cmd_quad, 1),
    "roots": (cmd_roots, 1),
    "classify": (cmd_classify, 1),
    "limits": (cmd_limits, 1),
    "chars": (cmd_chars, 1),
    "equiv": (cmd_equiv, 2),
    "eval": (cmd_eval, 1),
    "kernel-check": (cmd_kernel_check, None),
}


def _common(default) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=default, help="machine-readable output")
    common.add_argument("--precision", type=int, default=default, metavar="BITS", help="numeric precision in bits")
    common.add_argument("--periods", type=int, default=default, metavar="N", help="number of periods to iterate")
    return common


def build_parser() -> argparse.ArgumentParser:
    # options may come before or after the subcommand; the subcommand's
    # copies must not reset values given before it
    ap = _Parser(prog="pcfalg", description=__doc__, parents=[_common(None)])
    ap.set_defaults(json=False)
    sub_common = _common(argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, (_, arity) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[sub_common])
        if arity is None:
            sp.add_argument("cf", nargs="?", help="word to certify")
            sp.add_argument("--variant", choices=grouptheory.VARIANTS)
            sp.add_argument("--x")
            sp.add_argument("--alpha")
            sp.add_argument("--amalgam", action="store_true")
            sp.add_argument("--exceptions", action="store_true")
        else:
            sp.add_argument("cf", nargs="*", help="continued fraction literal(s); '-' or none reads stdin")
        if name == "eval":
            sp.add_argument("-n", "--count", type=int, help="number of convergents")
    return ap


def _read_inputs(args, arity, stdin):
    raw = args.cf
    if arity is None:
        if raw == "-":
            raw = stdin.read().strip()
        return [parse_cf(raw)] if raw else []
    if not raw or raw == ["-"]:
        raw = [line.strip() for line in stdin.read().splitlines() if line.strip()]
    if len(raw) != arity:
        raise UsageError(f"{args.command} takes {arity} argument(s), got {len(raw)}")
    return [parse_cf(t) for t in raw]


def run(argv=None, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        fn, arity = COMMANDS[args.command]
        cfs = _read_inputs(args, arity, stdin)
        data, text = fn(args, cfs)
    except UsageError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, TypeError, TowerMismatch, EmbeddingError) as e:
        print(f"error: {e}", file=err)
        return EXIT_DOMAIN
    if args.json:
        print(json.dumps(data, sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
