"""Command-line interface.

Exit codes: 0 success, 1 domain validation failure (or a failed check),
2 parse failure or bad usage.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .catalan import dyck_from_tree, tree_from_dyck
from .decomposition import beta, beta_inverse
from .flows import (
    FlowError,
    enumerate_closed_flows,
    enumerate_flows_with_exit,
    flow_to_interval_poset,
    interval_poset_to_flow,
)
from .formats import (
    ParseError,
    ValidationError,
    parse_object,
    render_dot,
    render_object,
)
from .interval_poset import IntervalPosetError, from_tree_pair, lower_tree, upper_tree
from .verify import (
    check_beta_involution,
    check_functional_equations,
    check_symmetry,
    count_formula,
    enumerate_interval_posets,
    flow_theorem_rows,
    phi,
)

# the range in which beta was reported to be an involution; larger sizes are exploratory
INVOLUTION_GATING_SIZE = 6

CONVERSIONS = {
    ("tree", "dyck"): dyck_from_tree,
    ("dyck", "tree"): tree_from_dyck,
    ("tree-pair", "poset"): lambda pair: from_tree_pair(*pair),
    ("poset", "tree-pair"): lambda i: (lower_tree(i), upper_tree(i)),
    ("poset", "flow"): interval_poset_to_flow,
    ("flow", "poset"): flow_to_interval_poset,
}


class CheckFailed(Exception):
    pass


def _text(value: str | None) -> str:
    return value if value is not None else sys.stdin.read()


def _table(header: Sequence[str], rows: list[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join(
        "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells
    )


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_count(args) -> str:
    formula = count_formula(args.size)
    if not args.enumerate:
        return str(formula)
    enumerated = len(enumerate_interval_posets(args.size))
    out = _table(
        ["n", "enumerated", "formula", "match"],
        [[args.size, enumerated, formula, _yes(enumerated == formula)]],
    )
    if enumerated != formula:
        raise CheckFailed(out)
    return out


def cmd_phi(args) -> str:
    lines = [phi(args.max_size).render()]
    ok = True
    if args.check_symmetry:
        sym = check_symmetry(args.max_size)
        lines.append(f"symmetry: {_yes(sym)}")
        ok &= sym
    if args.check_equations:
        eq4, eq7 = check_functional_equations(args.max_size)
        lines.append(f"equation-product-form: {_yes(eq4)}")
        lines.append(f"equation-sum-form: {_yes(eq7)}")
        ok &= eq4 and eq7
    out = "\n".join(lines)
    if not ok:
        raise CheckFailed(out)
    return out


def cmd_beta(args) -> str:
    poset = parse_object("poset", _text(args.poset))
    return render_object(beta_inverse(poset) if args.inverse else beta(poset))


def cmd_check_involution(args) -> str:
    rows, ok = [], True
    for rep in check_beta_involution(args.max_size):
        gating = rep.n <= INVOLUTION_GATING_SIZE
        if gating:
            ok &= rep.involution and rep.ir_lc_is_beta
        rows.append(
            [rep.n, rep.count, _yes(rep.involution), _yes(rep.ir_lc_is_beta),
             "gating" if gating else "exploratory"]
        )
    out = _table(["n", "posets", "involution", "ir-lc-equals-beta", "status"], rows)
    if not ok:
        raise CheckFailed(out)
    return out


def cmd_convert(args) -> str:
    try:
        fn = CONVERSIONS[(args.from_kind, args.to_kind)]
    except KeyError:
        pairs = ", ".join(f"{a}->{b}" for a, b in CONVERSIONS)
        raise argparse.ArgumentTypeError(
            f"unsupported conversion {args.from_kind}->{args.to_kind}; supported: {pairs}"
        ) from None
    value = parse_object(args.from_kind, _text(args.input))
    return render_object(fn(value))


def cmd_flows(args) -> str:
    forest = parse_object("forest", _text(args.forest))
    flows = enumerate_closed_flows(forest) if args.closed else enumerate_flows_with_exit(
        forest, args.exit_rate
    )
    if args.count:
        return str(len(flows))
    return "\n".join(render_object(f) for f in flows)


def cmd_verify_flow_theorem(args) -> str:
    rows = flow_theorem_rows(args.max_size)
    out = _table(
        ["forest", "closed-flows", "tamari-ideal", "match"],
        [[r.forest, r.closed_flows, r.ideal_size, _yes(r.match)] for r in rows],
    )
    if not all(r.match for r in rows):
        raise CheckFailed(out)
    return out


def cmd_render(args) -> str:
    if args.kind not in ("poset", "flow"):
        raise argparse.ArgumentTypeError("DOT rendering supports --kind poset or flow")
    return render_dot(parse_object(args.kind, _text(args.input))).rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamari-intervals",
        description="Tamari interval-posets, the trees/initial-rise bijection and flows.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of intervals of size N")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="also count by enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("phi", help="generating function by size, trees and initial rise")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--check-symmetry", action="store_true")
    p.add_argument("--check-equations", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("beta", help="apply the statistic-swapping bijection")
    p.add_argument("--poset", help="poset text (default: standard input)")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("check-involution", help="test beta(beta(I)) == I by size")
    p.add_argument("--max-size", type=int, required=True)
    p.set_defaults(func=cmd_check_involution)

    kinds = sorted({k for pair in CONVERSIONS for k in pair})
    p = sub.add_parser("convert", help="convert between object kinds")
    p.add_argument("--from", dest="from_kind", choices=kinds, required=True)
    p.add_argument("--to", dest="to_kind", choices=kinds, required=True)
    p.add_argument("--input", help="object text (default: standard input)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("flows", help="enumerate flows of a forest")
    p.add_argument("--forest", help="forest text (default: standard input)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--closed", action="store_true")
    mode.add_argument("--exit-rate", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_flows)

    p = sub.add_parser("verify-flow-theorem", help="closed flows vs. Tamari ideals")
    p.add_argument("--max-size", type=int, required=True)
    p.set_defaults(func=cmd_verify_flow_theorem)

    p = sub.add_parser("render", help="export an object as Graphviz DOT")
    p.add_argument("--dot", action="store_true", required=True)
    p.add_argument("--kind", choices=["poset", "flow"], required=True)
    p.add_argument("--input", help="object text (default: standard input)")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("size", "max_size", "exit_rate"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be nonnegative")
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except argparse.ArgumentTypeError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(str(exc))
        return 1
    except (ValidationError, IntervalPosetError, FlowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
