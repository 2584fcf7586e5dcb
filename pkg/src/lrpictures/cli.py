"""Command line front end.

    lrpictures coeff --lambda 2,1 --mu 2,1 --nu 3,2,1 --method all
    lrpictures enumerate crystal --lambda 1 --mu 1 --nu 2 --order J
    lrpictures enumerate pictures --lambda 1 --mu 1 --nu 2
    lrpictures orders 2,2
    lrpictures add --start 2,1 --letters 3,1,2,1,2
    lrpictures verify bijection --max-nu 6

Exit status: 0 on success, 1 when a check or an agreement fails, 2 on
usage or validation errors, 3 when a budget cap would be exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as sweeps
from .crystal import add_letters, lr_crystal
from .errors import BudgetExceeded, OrderValidationError
from .oracle import lr_coefficient_ballot
from .orders import enumerate_admissible_orders, order_from_comparator, parse_order
from .pictures import DEFAULT_PICTURE_CAP, enumerate_pictures
from .shapes import Partition, SkewShape, cells, contains, parse_partition, parse_skew
from .tableaux import tableau_to_json

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _letters_arg(text: str) -> list[int]:
    try:
        letters = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of letters: {text!r}") from None
    if any(k < 1 for k in letters):
        raise argparse.ArgumentTypeError("letters must be positive")
    return letters


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_order(spec: str, domain):
    """``J``, ``F`` or ``@path`` to an order file."""
    if spec.upper() in ("J", "F"):
        return order_from_comparator(domain, spec.upper())
    if spec.startswith("@"):
        text = Path(spec[1:]).read_text()
        return parse_order(text, domain=domain, check_admissible=True)
    raise OrderValidationError(f"order must be J, F or @path, got {spec!r}")


def _given(value, default):
    return default if value is None else value


def _compatible(lam, mu, nu) -> bool:
    return lam.size + mu.size == nu.size and contains(nu, lam)


def cmd_coeff(args, out) -> int:
    lam, mu, nu = args.lam, args.mu, args.nu
    methods = ["crystal", "pictures", "ballot"] if args.method == "all" else [args.method]
    values = {}
    for m in methods:
        if m == "ballot":
            values[m] = lr_coefficient_ballot(lam, mu, nu)
        elif not _compatible(lam, mu, nu):
            values[m] = 0
        elif m == "crystal":
            values[m] = len(lr_crystal(lam, mu, nu))
        else:
            values[m] = len(enumerate_pictures(mu, SkewShape(nu, lam), cap=args.cap))
    agree = len(set(values.values())) == 1
    if args.json:
        payload = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "coefficients": values}
        if args.method == "all":
            payload["agree"] = agree
        print(_dump(payload), file=out)
    else:
        for m, v in values.items():
            print(f"{m:<9} {v}", file=out)
        if args.method == "all":
            print(f"{'agree':<9} {'true' if agree else 'false'}", file=out)
    return 0 if agree else EXIT_FAIL


def cmd_enumerate(args, out) -> int:
    lam, mu, nu = args.lam, args.mu, args.nu
    if not _compatible(lam, mu, nu):
        raise ValueError("need |lambda| + |mu| = |nu| and lambda inside nu")
    skew = SkewShape(nu, lam)
    A_prime = _load_order(args.order, cells(mu))
    if args.kind == "crystal":
        items = [tableau_to_json(t) for t in lr_crystal(lam, mu, nu, A_prime)]
    else:
        A = _load_order(args.target_order, cells(skew))
        items = [f.to_json() for f in enumerate_pictures(mu, skew, A, A_prime, cap=args.cap)]
    for item in items:
        print(_dump(item), file=out)
    print(_dump({"count": len(items)}), file=out)
    return 0


def cmd_orders(args, out) -> int:
    shape = parse_skew(args.shape)
    domain = cells(shape)
    orders = enumerate_admissible_orders(domain, cap=args.cap)
    for o in orders:
        if args.json:
            print(_dump([[c.row, c.col] for c in o.sequence]), file=out)
        else:
            print(" ".join(f"{c.row},{c.col}" for c in o.sequence), file=out)
    if args.json:
        print(_dump({"count": len(orders)}), file=out)
    else:
        print(f"# count: {len(orders)}", file=out)
    return 0


def cmd_add(args, out) -> int:
    trace = add_letters(args.start, args.letters)
    if args.json:
        print(_dump(trace.to_json()), file=out)
    else:
        for step in trace.steps:
            shape = ",".join(str(p) for p in step.shape)
            print(f"{step.letter}  -> ({step.destination.row},{step.destination.col})  {shape}", file=out)
        print(f"all_young {'true' if trace.all_young else 'false'}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    caps = sweeps.default_caps()
    cap_nu = args.cap_nu if args.cap_nu is not None else caps["nu"]
    cap_mu = args.cap_mu if args.cap_mu is not None else caps["mu"]
    suites = sweeps.SUITES if args.suite == "all" else (args.suite,)
    common = {"workers": args.workers, "cap_nu": cap_nu}
    plan = []
    for name in suites:
        if name == "counts":
            plan.append((sweeps.run_counts, dict(common, max_nu=_given(args.max_nu, 8),
                                                 max_rows=args.max_rows)))
        elif name == "bijection":
            plan.append((sweeps.run_bijection, dict(common, max_nu=_given(args.max_nu, 7),
                                                    max_rows=args.max_rows,
                                                    pair_limit=args.pair_limit)))
        elif name == "order-independence":
            plan.append((sweeps.run_order_independence, dict(common, max_nu=_given(args.max_nu, 7),
                                                             max_mu=_given(args.max_mu, 5), cap_mu=cap_mu)))
        else:
            plan.append((sweeps.run_theorem36, dict(common, max_entry=args.max_entry,
                                                    max_size=_given(args.max_size, 4))))
    # every budget is checked before any sweep runs, so an overflow prints nothing
    for _, kw in plan:
        sweeps.check_budgets(**kw)
    reports = [run(**kw) for run, kw in plan]
    if args.json:
        payload = [r.to_json() for r in reports]
        print(_dump(payload[0] if len(payload) == 1 else payload), file=out)
    else:
        print("\n\n".join(r.render_table(args.verbose) for r in reports), file=out)
    return 0 if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrpictures",
                                     description="Admissible pictures and Littlewood-Richardson crystals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def triple_flags(p):
        p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True,
                       metavar="PARTS", help="inner shape, e.g. 2,1 (empty string for the empty partition)")
        p.add_argument("--mu", type=_partition_arg, required=True, metavar="PARTS")
        p.add_argument("--nu", type=_partition_arg, required=True, metavar="PARTS")

    p = sub.add_parser("coeff", help="Littlewood-Richardson coefficient by one or all methods")
    triple_flags(p)
    p.add_argument("--method", choices=["crystal", "pictures", "ballot", "all"], default="all")
    p.add_argument("--cap", type=int, default=DEFAULT_PICTURE_CAP, help="largest |mu| for picture search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("enumerate", help="stream crystal elements or pictures as JSON lines")
    p.add_argument("kind", choices=["crystal", "pictures"])
    triple_flags(p)
    p.add_argument("--order", default="J", help="order on mu: J, F or @file (default J)")
    p.add_argument("--target-order", default="J", help="order on nu/lambda for pictures: J, F or @file")
    p.add_argument("--cap", type=int, default=DEFAULT_PICTURE_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orders", help="list admissible orders on a shape such as 2,2 or 3,2/1")
    p.add_argument("shape")
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("add", help="trace the addition of letters to a Young diagram")
    p.add_argument("--start", type=_partition_arg, required=True)
    p.add_argument("--letters", type=_letters_arg, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("suite", choices=list(sweeps.SUITES) + ["all"])
    p.add_argument("--max-nu", type=int, default=None)
    p.add_argument("--max-mu", type=int, default=None)
    p.add_argument("--max-rows", type=int, default=4, help="row bound on nu for counts and bijection")
    p.add_argument("--pair-limit", type=int, default=4,
                   help="use every admissible order pair while both shapes have at most this many cells")
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--cap-nu", type=int, default=None, help="raise the |nu| budget cap (env LRPIC_CAP_NU)")
    p.add_argument("--cap-mu", type=int, default=None, help="raise the |mu| budget cap (env LRPIC_CAP_MU)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", action="store_true", help="list every check, not just failures")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OrderValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
