"""Command line interface.

Exit status: 0 on success, 1 on bad input or usage, 2 when an internal
consistency check fails.
"""

import argparse
import json
import sys

from . import catalog, exact, formats, report, roots as roots_mod, stability
from .errors import InvariantViolation, ToricStabError
from .polytope import DUAL, FAN
from .lattice import ehrhart_polynomial, lattice_sum_polynomial


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common(sub, lattice_default=FAN):
    sub.add_argument("--lattice", choices=(FAN, DUAL), default=lattice_default,
                     help=f"lattice of the polytope in the file (default {lattice_default})")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--transpose", action=argparse.BooleanOptionalAction, default=None,
                     help="read columns as vertices (default: only when m < n)")


def build_parser():
    p = _Parser(prog="toricstab", description="Stability invariants of toric Fano varieties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    a = sub.add_parser("analyze", help="full stability report")
    a.add_argument("path")
    _common(a)
    r = sub.add_parser("roots", help="Demazure roots and reductivity")
    r.add_argument("path")
    _common(r)
    d = sub.add_parser("ding", help="Ding invariant of a piecewise linear function")
    d.add_argument("path")
    d.add_argument("--pl", required=True, help="piecewise linear function file")
    # the function lives on the moment side, so the polytope is read there too
    _common(d, lattice_default=DUAL)
    c = sub.add_parser("chow", help="Chow condition s(i) = E(i) b")
    c.add_argument("path")
    c.add_argument("--level", type=int, default=None)
    _common(c)
    s = sub.add_parser("scan", help="analyze every polytope of a multi-entry file")
    s.add_argument("path")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-chow", action="store_true", help="skip the Ehrhart-based Chow checks")
    _common(s)
    v = sub.add_parser("verify-builtin", help="recompute the catalog expectations")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--show-skipped", action="store_true")
    return p


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    polys = formats.parse_polytopes(_read(args.path), args.lattice, args.transpose)
    if not polys:
        raise ToricStabError("no polytope in file", "empty")
    return polys


def _emit(args, items, text_fn):
    if args.format == "json":
        payload = items[0] if len(items) == 1 else items
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for i, item in enumerate(items):
            if len(items) > 1:
                sys.stdout.write(f"# entry {i}\n")
            sys.stdout.write(text_fn(item))


def cmd_analyze(args):
    reps = [report.analyze(p) for p in _load(args)]
    if args.format == "json":
        _emit(args, [r.to_dict() for r in reps], None)
    else:
        _emit(args, reps, lambda r: r.to_text())
    return 0


def _roots_dict(p):
    fan, _ = report.polytope_pair(p)
    if fan is None:
        raise ToricStabError("the dual of this polytope is not a lattice polytope", "not_reflexive")
    rs = roots_mod.demazure_roots(roots_mod.rays(fan))
    return rs, {
        "rays": [exact.format_vector(v) for v in roots_mod.rays(fan)],
        "roots": [{"tag": t, "root": exact.format_vector(m)} for t, m in rs.tagged()],
        "reductive": roots_mod.is_reductive(rs),
        "vertex_sum_zero": roots_mod.vertex_sum_sufficient(fan),
    }


def cmd_roots(args):
    items = [_roots_dict(p) for p in _load(args)]
    if args.format == "json":
        _emit(args, [d for _, d in items], None)
        return 0

    def text(item):
        rs, d = item
        lines = [f"{t} {exact.format_vector(m)}" for t, m in rs.tagged()]
        lines.append(f"reductive: {'true' if d['reductive'] else 'false'}")
        return "\n".join(lines) + "\n"

    _emit(args, items, text)
    return 0


def _moment_side(p):
    return report.polytope_pair(p)[1]


def cmd_ding(args):
    polys = _load(args)
    if len(polys) != 1:
        raise ToricStabError("ding expects a single polytope", "entry_count")
    d = _moment_side(polys[0])
    u = formats.parse_pl_function(_read(args.pl), d.dim)
    val = stability.ding_invariant(d, u)
    if args.format == "json":
        sys.stdout.write(json.dumps({"ding_invariant": exact.format_rational(val)}) + "\n")
    else:
        sys.stdout.write(exact.format_rational(val) + "\n")
    return 0


def _chow_items(d, level):
    data = stability.ChowData(ehrhart_polynomial(d), lattice_sum_polynomial(d), d.barycenter())
    levels = [level] if level is not None else list(range(1, d.dim + 1))
    out = []
    for i in levels:
        lhs, rhs = data.sides(i)
        out.append({
            "level": i,
            "holds": lhs == rhs,
            "lattice_sum": exact.format_vector(lhs),
            "ehrhart_times_barycenter": exact.format_vector(rhs),
        })
    asym = None if level is not None else stability.chow_condition_asymptotic(d, data)
    return {"levels": out, "asymptotic": asym}


def cmd_chow(args):
    items = [_chow_items(_moment_side(p), args.level) for p in _load(args)]
    if args.format == "json":
        _emit(args, items, None)
        return 0

    def text(item):
        lines = []
        for row in item["levels"]:
            i = row["level"]
            lines.append(f"level {i}: {'true' if row['holds'] else 'false'}")
            lines.append(f"  s({i}) = {row['lattice_sum']}")
            lines.append(f"  E({i})*b = {row['ehrhart_times_barycenter']}")
        if item["asymptotic"] is not None:
            lines.append(f"asymptotic: {'true' if item['asymptotic'] else 'false'}")
        return "\n".join(lines) + "\n"

    _emit(args, items, text)
    return 0


def cmd_scan(args):
    if args.jobs < 1:
        raise ToricStabError("--jobs must be positive", "usage")
    res = report.scan(args.path, args.lattice, args.jobs, args.transpose, chow=not args.no_chow)
    if args.format == "json":
        sys.stdout.write(json.dumps(res, indent=2) + "\n")
        return 0
    for item in res["entries"]:
        name = item["label"] or f"#{item['index']}"
        if "error" in item:
            sys.stdout.write(f"{name}: error[{item['code']}] {item['error']}\n")
            continue
        rep = item["report"]
        flags = " ".join(f"{k}={_yn(rep[k])}" for k in ("k_polystable", "reductive", "smooth"))
        sys.stdout.write(f"{name}: delta={rep['delta']} {flags}\n")
    c = res["counts"]
    sys.stdout.write(" ".join(f"{k}={v}" for k, v in c.items()) + "\n")
    return 0


def _yn(v):
    return "-" if v is None else ("yes" if v else "no")


def cmd_verify(args):
    results = catalog.verify_builtin()
    failed = any(r.status == "fail" for r in results)
    if args.format == "json":
        rows = [
            {
                "entry": r.entry,
                "key": r.key,
                "status": r.status,
                "expected": catalog.format_value(r.expected),
                "computed": catalog.format_value(r.computed),
                "provenance": r.provenance,
                "note": r.note,
            }
            for r in results
        ]
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    else:
        for r in results:
            if r.status == "skipped" and not args.show_skipped:
                continue
            line = (f"{r.status.upper():8} {r.entry:10} {r.key:28} expected {catalog.format_value(r.expected)}"
                    f"  computed {catalog.format_value(r.computed)}")
            if r.note:
                line += f"  [{r.note}]"
            sys.stdout.write(line + "\n")
        counts = {}
        for r in results:
            counts[r.status] = counts.get(r.status, 0) + 1
        sys.stdout.write(" ".join(f"{k}={counts.get(k, 0)}" for k in ("pass", "fail", "flagged", "skipped")) + "\n")
    return 1 if failed else 0


COMMANDS = {
    "analyze": cmd_analyze,
    "roots": cmd_roots,
    "ding": cmd_ding,
    "chow": cmd_chow,
    "scan": cmd_scan,
    "verify-builtin": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InvariantViolation as e:
        sys.stderr.write(f"internal error[{e.code}]: {e}\n")
        return 2
    except ToricStabError as e:
        sys.stderr.write(f"error[{e.code}]: {e}\n")
        return 1
    except (OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
