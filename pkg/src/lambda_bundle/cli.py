"""Command-line interface.

Exit codes: 0 success, 1 domain failure (invalid labeling, unqualified
shift), 2 usage error.

Examples::

    lambda-bundle build --m 13 --n 11 --shift 3 --format json --out x.json
    lambda-bundle label --m 13 --n 11 --shift 3 --format grid
    lambda-bundle verify --graph x.json --labeling f.json
    lambda-bundle lambda --graph c5.json
    lambda-bundle certify --m 3 --n 11 --shift 10
    lambda-bundle sweep --m-range 3..8 --n-list 11,22 --out sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from lambda_bundle.graph import BundleSpec, CyclicShift, ExplicitPermutation, Graph, make_bundle
from lambda_bundle.labeling import (
    Labeling,
    grid_from_csv,
    grid_to_csv,
    grid_view,
    span,
    verify_l21,
)
from lambda_bundle.solver import (
    CertificationError,
    Status,
    certify_theorem_instance,
    default_budget_secs,
    solve_lambda,
    DEFAULT_BUDGET_NODES,
)
from lambda_bundle.theorem import (
    FORMULA_NAMES,
    FormulaParams,
    UnqualifiedShiftError,
    classify_shift,
    formula_name,
    generate_labeling,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _bundle_spec(args) -> BundleSpec:
    try:
        if getattr(args, "perm", None):
            perm = tuple(int(x) for x in args.perm.split(","))
            return BundleSpec(args.m, args.n, ExplicitPermutation(perm))
        return BundleSpec(args.m, args.n, CyclicShift(args.shift))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_shift(args) -> None:
    if args.m < 3 or args.n < 3:
        raise UsageError(f"cycle lengths must be >= 3, got m={args.m}, n={args.n}")
    if not 0 <= args.shift < args.n:
        raise UsageError(f"--shift must lie in [0, {args.n})")


def _read_graph(path: str) -> Graph:
    try:
        return Graph.from_json(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph {path}: {exc}") from exc


def _read_labeling(path: str) -> Labeling:
    try:
        text = Path(path).read_text()
        if path.endswith(".csv"):
            return grid_from_csv(text)[0]
        return Labeling.from_json(text)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read labeling {path}: {exc}") from exc


def cmd_build(args) -> int:
    if args.perm is None:
        _check_shift(args)
    g = make_bundle(_bundle_spec(args))
    _emit(g.to_dot() if args.format == "dot" else g.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    _check_shift(args)
    sc = classify_shift(args.m, args.n, args.shift)
    if not sc.qualified:
        print(f"unqualified shift (shift mod 11 = {sc.residue_checked})")
        return EXIT_DOMAIN
    print(f"{formula_name(sc.family, sc.a)}: family {sc.family.value}, a = {sc.a}")
    return EXIT_OK


def cmd_label(args) -> int:
    _check_shift(args)
    force = None if args.formula == "auto" else FORMULA_NAMES[args.formula]
    try:
        params = FormulaParams.for_instance(args.m, args.n, args.shift, force)
    except UnqualifiedShiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if force is not None:
        print(f"warning: formula {args.formula} forced; labeling is unverified", file=sys.stderr)
    f = generate_labeling(params)
    if args.format == "grid":
        _emit(grid_to_csv(grid_view(f, args.m, args.n)), args.out)
    else:
        _emit(f.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    f = _read_labeling(args.labeling)
    if len(f) != g.vertex_count:
        raise UsageError(f"labeling has {len(f)} entries but graph has {g.vertex_count} vertices")
    violations = verify_l21(g, f)
    lines = []
    if violations:
        lines.append(f"invalid: {len(violations)} violations")
        for v in violations:
            lines.append(f"{v.kind.value} {v.pair[0]} {v.pair[1]} labels {v.labels[0]} {v.labels[1]}")
    else:
        lines.append(f"valid, span {span(f)}")
    report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    if args.report:
        Path(args.report).write_text(report)
    return EXIT_DOMAIN if violations else EXIT_OK


def cmd_lambda(args) -> int:
    g = _read_graph(args.graph)
    if g.vertex_count == 0:
        raise UsageError("graph must be nonempty")
    r = solve_lambda(g, budget_nodes=args.budget_nodes, budget_secs=args.budget_secs)
    if r.status is Status.EXACT:
        print(f"lambda = {r.lambda_number}")
    else:
        print(f"timeout: lambda in [{r.lower}, {r.upper}]")
    print(f"nodes explored: {r.nodes_explored}")
    return EXIT_OK


def cmd_certify(args) -> int:
    _check_shift(args)
    try:
        cert = certify_theorem_instance(args.m, args.n, args.shift)
    except UnqualifiedShiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(cert.to_json())
    return EXIT_OK


SWEEP_HEADER = ["m", "n", "shift", "family", "a", "valid", "span"]


def sweep_rows(m_values, n_values):
    """One row per qualifying ``(m, n, shift)``, verifying each closed-form labeling."""
    for m in m_values:
        for n in n_values:
            for shift in range(n):
                sc = classify_shift(m, n, shift)
                if not sc.qualified:
                    continue
                params = FormulaParams(m, n, shift, sc.family, sc.a)
                f = generate_labeling(params)
                valid = not verify_l21(make_bundle(BundleSpec.shifted(m, n, shift)), f)
                yield [m, n, shift, sc.family.value, sc.a, str(valid).lower(), span(f)]


def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"--m-range must look like A..B, got {text!r}") from None


def cmd_sweep(args) -> int:
    m_values = _parse_range(args.m_range)
    try:
        n_values = [int(x) for x in args.n_list.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--n-list must be comma-separated integers, got {args.n_list!r}") from None
    if any(m < 3 for m in m_values) or any(n < 3 for n in n_values):
        raise UsageError("cycle lengths must be >= 3")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    writer.writerows(sweep_rows(m_values, n_values))
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-bundle",
        description="L(2,1)-labelings of strong bundles of cycles over cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_flags(p, shift_required=True):
        p.add_argument("--m", type=int, required=True, help="base cycle length")
        p.add_argument("--n", type=int, required=True, help="fiber cycle length")
        p.add_argument("--shift", type=int, required=shift_required, default=0, help="cyclic shift")

    p = sub.add_parser("build", help="write a bundle graph as JSON or DOT")
    instance_flags(p, shift_required=False)
    p.add_argument("--perm", help="explicit fiber automorphism, comma-separated (overrides --shift)")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("classify", help="report which closed-form labeling fits a shift")
    instance_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("label", help="emit the closed-form labeling")
    instance_flags(p)
    p.add_argument("--formula", choices=["auto", *FORMULA_NAMES], default="auto")
    p.add_argument("--format", choices=["grid", "json"], default="grid")
    p.add_argument("--out")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling against the L(2,1) conditions")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True, help="labeling JSON, or grid CSV if the name ends in .csv")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lambda", help="compute the lambda-number by exact search")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget-nodes", type=int, default=DEFAULT_BUDGET_NODES)
    p.add_argument("--budget-secs", type=float, default=None)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("certify", help="certify lambda = 10 for a qualifying instance")
    instance_flags(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="verify every qualifying shift over a parameter range")
    p.add_argument("--m-range", required=True, help="inclusive range A..B")
    p.add_argument("--n-list", default="11,22,33")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget_secs", "unset") is None:
        try:
            args.budget_secs = default_budget_secs()
        except ValueError as exc:
            parser.error(str(exc))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
