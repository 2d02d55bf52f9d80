"""``octo-g2``: tables, constructions and exhaustive checks from the command line.

Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import __version__
from . import chevalley as ch
from . import derivations as dv
from . import linalg as la
from . import octonion as oc
from . import roots as rt
from . import standard_rep as sr
from . import verify as vf
from . import weyl_modules as wm
from .scalar import to_json

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class Output:
    """Rendered document plus the exit status it implies."""

    def __init__(self, text: str, status: int = 0):
        self.text = text if text.endswith("\n") else text + "\n"
        self.status = status


# rendering helpers -------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _matrix_json(op: la.Operator) -> list:
    return [[to_json(c) for c in row] for row in op.rows]


def _matrix_text(op: la.Operator, indent: str = "  ") -> str:
    cells = [[str(c) for c in row] for row in op.rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(indent + " ".join(c.rjust(width) for c in row) for row in cells)


def _slot_name(slot: int) -> str:
    return "u" if slot == 0 else f"e{slot - 1}"


def _coef_term(c, name: str) -> str:
    s = str(c)
    if s == "1":
        return name
    if s.startswith("-") and not any(ch_ in s[1:] for ch_ in "+-"):
        return "-" + _coef_term(s[1:], name)
    if any(ch_ in s[1:] for ch_ in "+-") or "/" in s:
        return f"({s}){name}"
    return f"{s}{name}"


def _combination(terms: list[tuple[object, str]]) -> str:
    parts = [_coef_term(c, n) for c, n in terms if c]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def wedge_text(w: dv.Wedge2) -> str:
    return _combination([(c, f"e{i}^e{j}") for (i, j), c in sorted(w.coeffs.items())])


def g_expression(x: dv.GElement) -> str:
    pairs = dv.g_basis_pairs()
    return _combination([(c, f"e{i}{j}") for c, (i, j) in zip(x.coords, pairs)])


def _weight_name(w) -> str:
    return "v0" if w is None else f"v_{w}"


# commands ----------------------------------------------------------------------

def cmd_multable(args) -> Output:
    table = oc.multiplication_table()
    if args.format == "json":
        return Output(_dump([[{"sign": s, "index": k} for s, k in row] for row in table]))
    if args.format == "csv":
        rows = [
            [_slot_name(r), _slot_name(c), s, _slot_name(k)]
            for r, row in enumerate(table)
            for c, (s, k) in enumerate(row)
        ]
        return Output(_csv(["left", "right", "sign", "product"], rows))
    names = [_slot_name(k) for k in range(8)]
    lines = ["     " + " ".join(n.rjust(4) for n in names)]
    for r, row in enumerate(table):
        cells = [("+" if s > 0 else "-") + _slot_name(k) for s, k in row]
        lines.append(names[r].rjust(4) + " " + " ".join(c.rjust(4) for c in cells))
    return Output("\n".join(lines))


def _root_records() -> list[dict]:
    out = []
    for r in rt.ALL_ROOTS:
        m, n = rt.root_coordinates(r)
        out.append({"label": str(r), "m": m, "n": n, "kind": "short" if r.is_short else "long"})
    return out


def cmd_roots(args) -> Output:
    recs = _root_records()
    if args.format == "json":
        return Output(_dump(recs))
    if args.format == "csv":
        return Output(_csv(["label", "m", "n", "kind"], [list(r.values()) for r in recs]))
    lines = ["(m, n) = values on (H_beta, H_gamma)"]
    for rec in recs:
        lab = rt.RootLabel.parse(rec["label"])
        x, y = rt.simple_root_expansion((rec["m"], rec["n"]))
        pos = "positive" if lab in rt.POSITIVE_ROOTS else "negative"
        lines.append(
            f"  {rec['label']:<8} ({rec['m']:>2}, {rec['n']:>2})  {rec['kind']:<5}  "
            f"= {_combination([(x, 'beta'), (y, 'gamma')]):<16} {pos}"
        )
    return Output("\n".join(lines))


def cmd_chevalley(args) -> Output:
    named = ch.chevalley_basis().named()
    if args.format == "csv":
        raise UsageError("chevalley supports text and json")
    if args.format == "json":
        docs = []
        for name, x in named:
            doc = {"name": name, "expression": g_expression(x)}
            if args.matrices:
                doc["matrix"] = _matrix_json(x.op)
            docs.append(doc)
        return Output(_dump(docs))
    lines = []
    for name, x in named:
        lines.append(f"{name} = {g_expression(x)}")
        if args.matrices:
            lines.append(_matrix_text(x.op))
    return Output("\n".join(lines))


def cmd_structure(args) -> Output:
    names = ch.basis_names()
    sc = ch.structure_constants()
    if args.format == "csv":
        rows = [[a, b, *sc[(a, b)]] for a in names for b in names]
        return Output(_csv(["x", "y", *names], rows))
    if args.format == "json":
        return Output(
            _dump(
                {
                    "basis": list(names),
                    "brackets": [
                        {"x": a, "y": b, "coordinates": list(sc[(a, b)])}
                        for a in names
                        for b in names
                    ],
                }
            )
        )
    lines = []
    for a in names:
        for b in names:
            lines.append(f"[{a}, {b}] = {_combination(list(zip(sc[(a, b)], names)))}")
    return Output("\n".join(lines))


def cmd_action_table(args) -> Output:
    table = sr.action_table()
    ints = [[int(c.re) for c in row] for row in table]
    roots = [str(r) for r in rt.ALL_ROOTS]
    weights = [_weight_name(w) for w in sr.WEIGHT_LABELS]
    if args.format == "json":
        return Output(_dump({"roots": roots, "weights": weights, "table": ints}))
    if args.format == "csv":
        return Output(_csv(["root", *weights], [[r, *row] for r, row in zip(roots, ints)]))
    lines = ["E_rho v_w = c v_(rho+w); entries are c", " " * 11 + "".join(w.rjust(10) for w in weights)]
    for r, row in zip(roots, ints):
        lines.append(f"E_{r}".ljust(11) + "".join(str(c).rjust(10) for c in row))
    return Output("\n".join(lines))


def cmd_kernel(args) -> Output:
    if args.format == "csv":
        raise UsageError("kernel supports text and json")
    orbit = dv.delta_orbit()
    ker = dv.kernel_of_D()
    orbit_span = la.span([w.vector() for w in orbit], 21)
    ok = ker.dim == 7 and orbit_span == ker and all(dv.D_wedge(w).is_zero() for w in orbit)
    d_rank = la.rank(dv.D_matrix())
    status = 0 if ok and d_rank == 14 else 1
    if args.format == "json":
        doc = {
            "delta_orbit": [
                {"shift": k, "terms": [{"pair": [i, j], "coefficient": to_json(c)}
                                       for (i, j), c in sorted(w.coeffs.items())]}
                for k, w in enumerate(orbit)
            ],
            "kernel_dimension": ker.dim,
            "rank_D": d_rank,
            "orbit_spans_kernel": ok,
            "g_basis": [
                {"pair": [i, j], "matrix": _matrix_json(dv.D_basis(i, j))}
                for i, j in dv.g_basis_pairs()
            ],
        }
        return Output(_dump(doc), status)
    lines = ["Delta orbit under e_i -> e_(i+k):"]
    lines += [f"  k={k}: {wedge_text(w)}" for k, w in enumerate(orbit)]
    lines.append(f"dim ker D = {ker.dim}, rank D = {d_rank}")
    lines.append(f"orbit spans ker D: {'yes' if ok else 'NO'}")
    return Output("\n".join(lines), status)


def cmd_irrep(args) -> Output:
    if args.format == "csv" and not args.weights:
        raise UsageError("csv output of irrep needs --weights")
    try:
        res = wm.generate_irrep(args.a, args.b, max_degree=args.max_degree)
    except (wm.DegreeBoundExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    ok = res.dimension == res.weyl_dimension and res.highest_weight_ok and res.in_schur_image
    weights = sorted(res.weights.items(), key=lambda kv: (-sum(rt.simple_root_expansion(kv[0])), kv[0]))
    if args.format == "json":
        doc = {
            "a": res.a,
            "b": res.b,
            "degree": res.degree,
            "dimension": res.dimension,
            "weyl_dimension": res.weyl_dimension,
            "highest_weight_ok": res.highest_weight_ok,
            "in_young_image": res.in_schur_image,
        }
        if args.weights:
            doc["weights"] = [{"m": m, "n": n, "multiplicity": k} for (m, n), k in weights]
        return Output(_dump(doc), 0 if ok else 1)
    if args.format == "csv":
        return Output(_csv(["m", "n", "multiplicity"], [[m, n, k] for (m, n), k in weights]), 0 if ok else 1)
    lines = [
        f"Gamma_{{{res.a},{res.b}}} in tensor degree {res.degree}",
        f"dim = {res.dimension} (weyl oracle: {res.weyl_dimension})",
        f"highest weight vector: {'ok' if res.highest_weight_ok else 'FAILED'}",
        f"inside Young image: {'ok' if res.in_schur_image else 'FAILED'}",
    ]
    if args.weights:
        lines.append("weight (m, n)  multiplicity")
        lines += [f"  ({m:>2}, {n:>2})      {k}" for (m, n), k in weights]
    return Output("\n".join(lines), 0 if ok else 1)


def cmd_verify(args) -> Output:
    if args.format == "csv":
        raise UsageError("verify supports text and json")
    report = vf.run_suite(args.suite)
    text = _dump(report.to_json()) if args.format == "json" else report.to_text()
    return Output(text, 0 if report.passed else 1)


def cmd_conventions(args) -> Output:
    doc = {
        "field": "F_8 = F_2[a]/(a^3 + a + 1); elements print as 0, 1, a, a^2, ..., a^6",
        "octonion_product": "e^x e^y = (-1)^phi(x,y) e^(x+y), phi(x,y) = tr(y x^6)",
        "octonion_coordinates": ["u"] + [f"e{i}" for i in range(7)],
        "e_i": "e^(a^i); u = e^0 is the identity",
        "wedge_basis": [f"e{i}^e{j}" for i, j in dv.PAIRS],
        "g_basis": [f"e{i}{j}" for i, j in dv.g_basis_pairs()],
        "chevalley_basis": list(ch.basis_names()),
        "root_coordinates": "(m, n) = values on (H_beta, H_gamma)",
        "weight_basis": [_weight_name(w) for w in sr.WEIGHT_LABELS],
        "symmetries": "Fr: e_i -> e_2i, M: e_i -> e_(i+1)",
        "scalars": "exact Gaussian rationals; JSON {re: {num, den}, im: {num, den}} with decimal strings",
    }
    if args.format == "json":
        return Output(_dump(doc))
    if args.format == "csv":
        raise UsageError("conventions supports text and json")
    lines = []
    for k, v in doc.items():
        lines.append(f"{k}: {', '.join(v) if isinstance(v, list) else v}")
    return Output("\n".join(lines))


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="octo-g2", description="g2 as derivations of the octonions over F_8, in exact arithmetic."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("multable", cmd_multable, "signed 8x8 basis multiplication table")
    add("roots", cmd_roots, "the twelve roots with coordinates")
    p = add("chevalley", cmd_chevalley, "Chevalley basis in terms of e_ij")
    p.add_argument("--matrices", action="store_true", help="also print 8x8 matrices")
    add("structure", cmd_structure, "bracket table of the Chevalley basis")
    add("action-table", cmd_action_table, "E_rho on the weight vectors of V")
    add("kernel", cmd_kernel, "Delta orbit and ker D")
    p = add("irrep", cmd_irrep, "build Gamma_{a,b} inside a tensor power of V")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--weights", action="store_true", help="print weight multiplicities")
    p.add_argument("--max-degree", type=int, default=4, metavar="N")
    p = add("verify", cmd_verify, "run exhaustive checks")
    p.add_argument("--suite", default="all", choices=["all", *vf.SUITES])
    add("conventions", cmd_conventions, "print the fixed conventions")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"octo-g2: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out.text)
    else:
        sys.stdout.write(out.text)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
