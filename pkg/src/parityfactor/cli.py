"""Command-line entry point.

Exit status: 0 when the computation completed (whatever the mathematical
verdict), 1 on runtime or domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from . import constructions as cons
from .errors import ParityFactorError
from .factor import (
    DEFAULT_LIMIT,
    FactorCertificate,
    decide_bruteforce,
    find_parity_factor,
    parse_constraints,
)
from .graph import Graph, parse_graph, serialize_graph
from .spectral import adjacency_spectrum
from .theorem import best_theta, evaluate_conditions, verify_tightness


def _fmt(x: float) -> str:
    # rounding noise around zero would otherwise print as e.g. -1.7e-17
    if abs(x) < 1e-12:
        x = 0.0
    return f"{x:.12g}"


def _round_floats(obj):
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(_round_floats(obj), sort_keys=True) + "\n")


def _theta_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number or fraction: {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("theta must lie strictly between 0 and 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="seed for random generators (gen rand)")

    parser = argparse.ArgumentParser(prog="parityfactor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph")
    gsub = gen.add_subparsers(dest="kind", required=True)
    p = gsub.add_parser("kn", parents=[common], help="complete graph K_n")
    p.add_argument("--n", type=int, required=True)
    p = gsub.add_parser("cyc", parents=[common], help="cycle C_n")
    p.add_argument("--n", type=int, required=True)
    p = gsub.add_parser("kbip", parents=[common], help="complete bipartite K_{h,l}")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p = gsub.add_parser("H", parents=[common], help="extremal graph H(r, eta)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--eta", type=int, required=True)
    p = gsub.add_parser("F", parents=[common], help="tightness graph F(r, h, l)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--sidecar", type=Path, help="write the U/copies/params JSON here")
    p = gsub.add_parser("rand", parents=[common], help="random graph G(n, p) (uses --seed)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)

    p = sub.add_parser("spectrum", parents=[common], help="adjacency eigenvalues")
    p.add_argument("file", type=Path)
    p.add_argument("--k", type=int, help="print only the k-th largest eigenvalue")

    fac = sub.add_parser("factor", help="(g,f)-parity factors")
    fsub = fac.add_subparsers(dest="action", required=True)
    for action in ("check", "find"):
        p = fsub.add_parser(action, parents=[common])
        p.add_argument("file", type=Path)
        p.add_argument("--c", type=Path, required=True, dest="constraints")
        p.add_argument("--method", choices=("oracle", "matching", "both"),
                       default="oracle" if action == "check" else "matching")
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    thm = sub.add_parser("thm", help="evaluate the eigenvalue conditions")
    tsub = thm.add_subparsers(dest="action", required=True)
    p = tsub.add_parser("check", parents=[common])
    p.add_argument("file", type=Path)
    p.add_argument("--c", type=Path, required=True, dest="constraints")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--theta", type=_theta_arg)
    group.add_argument("--best-theta", action="store_true")
    p.add_argument("--h", type=int)

    p = sub.add_parser("tight", parents=[common], help="verify the tightness family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _read_graph(path: Path) -> Graph:
    return parse_graph(path.read_text())


def _cert_text(cert: FactorCertificate, out: TextIO, label: str = "") -> None:
    prefix = f"{label}: " if label else ""
    out.write(f"{prefix}verdict: {cert.verdict}\n")
    if cert.violation is not None:
        v = cert.violation
        out.write(f"{prefix}violation: S={list(v.S)} T={list(v.T)} deficiency={v.deficiency}\n")
    if cert.factor is not None:
        out.write(f"{prefix}factor: {len(cert.factor)} edges\n")
        for u, w in cert.factor:
            out.write(f"{u} {w}\n")


def _cmd_gen(args, out: TextIO) -> None:
    sidecar = None
    if args.kind == "kn":
        G = cons.complete_graph(args.n)
    elif args.kind == "cyc":
        G = cons.cycle_graph(args.n)
    elif args.kind == "kbip":
        G = cons.complete_bipartite(args.h, args.l)
    elif args.kind == "H":
        G = cons.extremal_H(args.r, args.eta)
    elif args.kind == "F":
        inst = cons.family_F(args.r, args.h, args.l)
        G, sidecar = inst.graph, inst.to_json()
        if args.sidecar is not None:
            args.sidecar.write_text(json.dumps(sidecar, sort_keys=True) + "\n")
    else:
        if not 0 <= args.p <= 1 or args.n < 0:
            raise cons.InputError("need n >= 0 and 0 <= p <= 1")
        rng = random.Random(args.seed)
        pairs = [(i, j) for i in range(args.n) for j in range(i + 1, args.n) if rng.random() < args.p]
        G = Graph.from_edges(args.n, pairs)
    text = serialize_graph(G)
    if args.json:
        payload = {"graph": text}
        if sidecar is not None:
            payload["sidecar"] = sidecar
        _dump(payload, out)
    else:
        out.write(text)


def _cmd_spectrum(args, out: TextIO) -> None:
    res = adjacency_spectrum(_read_graph(args.file))
    if args.k is not None:
        value = res.eigenvalue(args.k)
        if args.json:
            _dump({"k": args.k, "eigenvalue": value}, out)
        else:
            out.write(_fmt(value) + "\n")
        return
    if args.json:
        _dump(res.to_json(), out)
    else:
        for x in res.eigenvalues:
            out.write(_fmt(x) + "\n")


def _cmd_factor(args, out: TextIO) -> None:
    G = _read_graph(args.file)
    c = parse_constraints(args.constraints.read_text(), G.n)
    if args.action == "find" or args.method == "matching":
        cert = find_parity_factor(G, c, limit=args.limit)
        if args.action == "check":
            cert = FactorCertificate(cert.verdict, violation=cert.violation)
    elif args.method == "oracle":
        cert = decide_bruteforce(G, c, limit=args.limit)
    else:
        oracle = decide_bruteforce(G, c, limit=args.limit)
        matched = find_parity_factor(G, c, limit=args.limit)
        if oracle.verdict != matched.verdict:
            raise RuntimeError(f"methods disagree: oracle {oracle.verdict}, matching {matched.verdict}")
        cert = FactorCertificate(oracle.verdict, violation=oracle.violation)
    if args.json:
        _dump(cert.to_json(), out)
    else:
        _cert_text(cert, out)


def _cmd_thm(args, out: TextIO) -> None:
    G = _read_graph(args.file)
    c = parse_constraints(args.constraints.read_text(), G.n)
    if args.theta is not None:
        report = evaluate_conditions(G, c, args.theta, args.h)
    else:
        _, report = best_theta(G, c, args.h)
    if args.json:
        _dump(report.to_json(), out)
        return
    out.write(f"theta = {report.theta} (theta* = {report.theta_star}), h = {report.h}, "
              f"h_e = {report.h_e}, h_o = {report.h_o}, min degree = {report.min_degree}\n")
    out.write("branch applicable sub  k     threshold       measured        verdict\n")
    for b in report.branches:
        k = "-" if b.eigen_index is None else str(b.eigen_index)
        thr = "-" if b.threshold is None else _fmt(b.threshold)
        meas = "-" if b.measured is None else _fmt(b.measured)
        out.write(f"{b.branch:<6} {str(b.applicable):<10} {b.sub:<4} {k:<5} {thr:<15} {meas:<15} {b.verdict}\n")
    out.write(f"verdict: {report.verdict}\n")


def _cmd_tight(args, out: TextIO) -> None:
    report = verify_tightness(args.r, args.h, args.l)
    if args.json:
        _dump(report.to_json(), out)
        return
    for ch in report.checks:
        measured = _fmt(ch.measured) if isinstance(ch.measured, float) else ch.measured
        expected = _fmt(ch.expected) if isinstance(ch.expected, float) else ch.expected
        if ch.name == "eigenvalues":
            detail = f"max |lambda_i - rho| = {measured} for i = {args.h + 1}..{args.l}, rho = {expected}"
        else:
            detail = f"measured {measured}, expected {expected}"
        out.write(f"{'PASS' if ch.passed else 'FAIL'} {ch.name}: {detail}\n")
    out.write(f"b = {report.b}\n")
    out.write(f"deficiency = {report.deficiency}\n")
    if not report.marginal_theta_ok:
        h = args.h
        out.write(f"note: l = {args.l} < 2h(h+1) = {2 * h * (h + 1)}; "
                  "the marginal-theta tightness argument does not apply\n")


COMMANDS = {
    "gen": _cmd_gen,
    "spectrum": _cmd_spectrum,
    "factor": _cmd_factor,
    "thm": _cmd_thm,
    "tight": _cmd_tight,
}


def execute(args: argparse.Namespace, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        COMMANDS[args.command](args, out)
    except (ParityFactorError, OSError, RuntimeError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    return execute(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
