"""Command line front end.

Exit codes: 0 every finding passed, 1 some finding failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import horospherical as horo
from .errors import UnbendableError
from .lie import all_types, parse_type
from .parabolic import (
    classify_splitting,
    marking,
    minimal_curve_contrast,
    tangent_splitting,
    unbendable_sweep,
)
from .report import Report, emit
from .roots import (
    classical_root_count,
    coroot_pairing,
    expected_special_nodes,
    generate_root_system,
    reflect_root,
    simple_root,
    special_nodes,
)
from .weights import from_labels, labels, module_weights, weyl_dimension


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _runs(s) -> list[list[int]]:
    return [[a, m] for a, m in s.runs()]


# -- subcommands -------------------------------------------------------------

def cmd_roots(args) -> Report:
    t = parse_type(args.type)
    rs = generate_root_system(t)
    rep = Report("roots", {"type": str(t)})
    rep.add("positive_roots", rs.positive_roots)
    rep.add("highest_root", rs.highest)
    expected = classical_root_count(t)
    rep.add("root_count", {"computed": len(rs.roots), "expected": expected},
            len(rs.roots) == expected)
    closed = all(
        rs.is_root(reflect_root(rs, b, i)) for b in rs.roots for i in range(1, t.rank + 1)
    )
    rep.add("reflection_closure", closed, closed)
    nodes = special_nodes(rs)
    rep.add("special_nodes", nodes, nodes == expected_special_nodes(t))
    return rep


def cmd_theta(args) -> Report:
    t = parse_type(args.type)
    rs = generate_root_system(t)
    theta = rs.highest
    rep = Report("theta", {"type": str(t)})
    rep.add("highest_root", theta, all(c >= 1 for c in theta))
    pairs = rs.theta_pairings
    others = sorted({v for b, v in pairs.items() if b != theta})
    rep.add("pairings_other_roots", others,
            set(others) <= {0, 1} and pairs[theta] == 2)
    rep.add("pairing_theta_theta", pairs[theta], pairs[theta] == 2)
    nodes = special_nodes(rs)
    node_pairs = {str(i): coroot_pairing(rs, simple_root(t.rank, i), theta) for i in nodes}
    want = 2 if t.rank == 1 else 1
    rep.add("special_nodes", {"nodes": nodes, "pairings": node_pairs},
            nodes == expected_special_nodes(t) and all(v == want for v in node_pairs.values()))
    return rep


def cmd_splitting(args) -> Report:
    t = parse_type(args.type)
    rs = generate_root_system(t)
    m = marking(t, args.parabolic)
    if args.curve == "theta":
        alpha = rs.highest
    elif args.curve.startswith("simple:"):
        try:
            i = int(args.curve.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad curve {args.curve!r}")
        alpha = simple_root(t.rank, t.check_index(i))
    else:
        raise UsageError(f"--curve must be 'theta' or 'simple:i', got {args.curve!r}")
    s = tangent_splitting(m, alpha)
    cls = classify_splitting(s)
    rep = Report("splitting", {"type": str(t), "parabolic": m.nodes, "curve": args.curve})
    rep.add("dimension", len(s))
    rep.add("splitting", _runs(s))
    # only C_theta carries a certificate; other curves are informational
    rep.add("classification", str(cls), cls.unbendable or args.curve != "theta")
    return rep


def cmd_unbendable(args) -> Report:
    if args.type == "all":
        types = all_types(args.max_rank)
        rep = Report("unbendable", {"type": "all", "max_rank": args.max_rank})
        total = 0
        for t in types:
            sweep = unbendable_sweep(t)
            bad = len(sweep.violations)
            total += bad
            rep.add(str(t), {"markings": len(sweep.entries), "violations": bad}, bad == 0)
        rep.add("total_violations", total, total == 0)
        return rep
    t = parse_type(args.type)
    sweep = unbendable_sweep(t)
    rep = Report("unbendable", {"type": str(t)})
    for e in sweep.entries:
        c = e.classification
        rep.add(
            "marking " + ",".join(map(str, e.marked)),
            {"p": c.p, "q": c.q, "dim": e.dimension, "classification": str(c)},
            c.unbendable,
        )
    return rep


def cmd_minimal_contrast(args) -> Report:
    t = parse_type(args.type)
    mc = minimal_curve_contrast(t, args.node)
    rep = Report("minimal-contrast", {"type": str(t), "node": args.node})
    rep.add("theta_coefficient", mc.theta_coefficient)
    rep.add("long_root", mc.long_root)
    rep.add("flag_coefficient_gt_1", mc.flagged)
    # graded weights of g/p along C_{alpha_i}; not a splitting certificate
    rep.add("simple_curve_weights", _runs(mc.simple_curve))
    theta_cls = classify_splitting(mc.theta_curve)
    rep.add("theta_curve", {"splitting": _runs(mc.theta_curve),
                            "classification": str(theta_cls)}, theta_cls.unbendable)
    return rep


def cmd_weights(args) -> Report:
    t = parse_type(args.type)
    if len(args.highest) != t.rank:
        raise UsageError(f"--highest needs {t.rank} labels for {t}")
    lam = from_labels(t, args.highest)
    support = sorted(set(args.support))
    mults = module_weights(t, support, lam)
    dim = weyl_dimension(t, support, lam)
    total = sum(mults.values())
    rep = Report("weights", {"type": str(t), "support": support, "highest": args.highest})
    rep.add("weyl_dimension", dim)
    rep.add("total_multiplicity", {"freudenthal": total, "weyl": dim}, total == dim)
    listing = sorted(
        ([list(labels(t, w)), k] for w, k in mults.items()),
        key=lambda x: (-sum(x[0]), [-c for c in x[0]]),
    )
    rep.add("weights", listing)
    return rep


def _selected_instances(args) -> list:
    if args.family is None:
        return horo.all_instances(args.max_n)
    fam = horo.parse_family(args.family)
    if fam is horo.Family.B_PAIR and args.n is None:
        return [horo.instantiate(fam, n) for n in range(3, args.max_n + 1)]
    if fam is horo.Family.C_PAIR and args.n is None:
        return [horo.instantiate(fam, n, k)
                for n in range(2, args.max_n + 1) for k in range(2, n + 1)]
    if fam is horo.Family.C_PAIR and args.k is None:
        return [horo.instantiate(fam, args.n, k) for k in range(2, args.n + 1)]
    return [horo.instantiate(fam, args.n, args.k)]


def _instance_name(d) -> str:
    parts = [d.family.value]
    if d.family in (horo.Family.B_PAIR, horo.Family.C_PAIR):
        parts.append(f"n={d.n}")
    if d.k is not None:
        parts.append(f"k={d.k}")
    return " ".join(parts)


def cmd_horospherical(args) -> Report:
    if args.action == "list":
        rep = Report("horospherical list")
        for r in horo.catalog():
            rep.add(r.family.value, {"variety": r.notation, "constraint": r.constraint,
                                     "parabolic_node": r.parabolic,
                                     "highest_weight": r.highest_weight})
        return rep
    instances = _selected_instances(args)
    subject = {"family": args.family or "all", "max_n": args.max_n}
    if args.n is not None:
        subject["n"] = args.n
    if args.k is not None:
        subject["k"] = args.k
    rep = Report(f"horospherical {args.action}", subject)
    for d in instances:
        cert = horo.verify(d)
        name = _instance_name(d)
        if args.action == "verify":
            rep.add(f"{name} pairing", {"value": cert.pairing,
                                        "expected": horo.EXPECTED_PAIRING[d.family]},
                    cert.pairing_ok)
            rep.add(f"{name} bundle", {"degrees": _runs(cert.bundle), "dim_V": cert.dim_v},
                    cert.bundle_ok)
            rep.add(f"{name} total", {"classification": str(classify_splitting(cert.total)),
                                      "dim_X": len(cert.total)},
                    cert.total_ok)
        else:
            base = horo.base_splitting(d)
            rep.add(f"{name} base", _runs(base), classify_splitting(base).unbendable)
            rep.add(f"{name} bundle", _runs(cert.bundle), cert.bundle_ok)
            rep.add(f"{name} total", _runs(cert.total), cert.total_ok)
    return rep


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--markdown", dest="format", action="store_const", const="markdown")
    fmt.set_defaults(format="markdown")

    parser = argparse.ArgumentParser(
        prog="unbendable",
        description="Exact certificates for highest-root curves on G/P and horospherical varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[fmt], help="positive roots, theta, special nodes")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("theta", parents=[fmt], help="pairings with the highest coroot")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("splitting", parents=[fmt], help="T(G/P) restricted to a curve C_alpha")
    p.add_argument("--type", required=True)
    p.add_argument("--parabolic", required=True, type=_int_list)
    p.add_argument("--curve", default="theta")
    p.set_defaults(func=cmd_splitting)

    p = sub.add_parser("unbendable", parents=[fmt], help="sweep all markings of a type")
    p.add_argument("--type", required=True, help="a type like B4, or 'all'")
    p.add_argument("--max-rank", type=int, default=8)
    p.set_defaults(func=cmd_unbendable)

    p = sub.add_parser("minimal-contrast", parents=[fmt],
                       help="C_{alpha_i} versus C_theta on G/P_i")
    p.add_argument("--type", required=True)
    p.add_argument("--node", required=True, type=int)
    p.set_defaults(func=cmd_minimal_contrast)

    p = sub.add_parser("weights", parents=[fmt], help="weights of a simple Levi module")
    p.add_argument("--type", required=True)
    p.add_argument("--support", required=True, type=_int_list)
    p.add_argument("--highest", required=True, type=_int_list,
                   help="fundamental-weight coordinates c1,...,cl")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("horospherical", parents=[fmt], help="the five non-homogeneous families")
    p.add_argument("action", choices=["list", "verify", "splitting"])
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_horospherical)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        report = args.func(args)
    except (UnbendableError, UsageError) as exc:
        print(f"unbendable {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(emit(report, args.format))
    return report.exit_code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
