"""Command line front end.

Exit codes: 0 success, 1 an HV violation or a formula mismatch was found,
2 usage error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .closed_forms import FAMILIES, family_grid, verify_family
from .config import max_order, worker_count
from .errors import GroupIOError, InternalInconsistency, InvalidInput, NotAGroup, NotFound, ResourceLimit, SgbError
from .group_core import load_cayley_table, make_cyclic, make_dicyclic, make_dihedral
from .indices import check_hv_generic
from .search import SEARCH_FAMILIES, SearchConfig, analyze, report_document, run_search, to_dot

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _csv_list(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _select_group(args):
    if args.table:
        return load_cayley_table(args.table)
    if not args.family:
        raise UsageError("give --family with --order or --param, or --table")
    if (args.order is None) == (args.param is None):
        raise UsageError("give exactly one of --order and --param")
    per = {"cyclic": 1, "dihedral": 2, "dicyclic": 4}[args.family]
    if args.order is not None:
        if args.n is not None:
            raise UsageError("--n only combines with --param")
        if args.order < 1 or args.order % per:
            raise UsageError(f"{args.family} groups have order divisible by {per}")
        param = args.order // per
    else:
        if args.param < 1:
            raise UsageError("--param must be positive")
        param = args.param ** (args.n or 1)
    build = {"cyclic": make_cyclic, "dihedral": make_dihedral, "dicyclic": make_dicyclic}[args.family]
    return build(param)


def cmd_report(args) -> int:
    g = _select_group(args)
    if args.dot:
        graph, _ = analyze(g, workers=worker_count())
        Path(args.dot).write_text(to_dot(graph))
        print(f"wrote {args.dot}", file=sys.stderr)
        if not args.json:
            return EXIT_OK
    doc = report_document(g, workers=worker_count())
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    families = _csv_list(args.families)
    bad = [f for f in families if f not in FAMILIES]
    if bad:
        raise UsageError(f"unknown families {bad}; choose from {', '.join(FAMILIES)}")
    try:
        primes = [int(p) for p in _csv_list(args.primes)]
    except ValueError:
        raise UsageError("--primes must be a comma separated list of integers") from None
    cap = max_order()
    failed = 0
    for spec in family_grid(families, primes, args.n_max):
        if spec.order > cap:
            print(f"SKIP {spec}: order {spec.order} above cap {cap}")
            continue
        rep = verify_family(spec, workers=worker_count())
        status = "OK  " if rep.ok else "FAIL"
        line = f"{status} {spec} order={spec.order} m1={rep.brute['m1']} m2={rep.brute['m2']}"
        if not rep.ok:
            failed += 1
            line += f" mismatches={','.join(rep.mismatches())}"
            line += f" brute_stars={rep.brute['stars']} formula_stars={rep.formula['stars']}"
        if rep.isolated:
            line += f" isolated={rep.isolated}"
        print(line)
    return EXIT_FOUND if failed else EXIT_OK


def cmd_search(args) -> int:
    families = _csv_list(args.families)
    try:
        config = SearchConfig(
            families=families,
            max_order=args.max_order,
            output_path=args.out,
            table_paths=args.table or (),
            resume=args.resume,
        )
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None
    summary = run_search(config, workers=worker_count())
    print(
        f"tested {summary.groups_tested} groups ({summary.new_records} new, "
        f"{summary.skipped} skipped), {len(summary.violations)} violations -> {summary.output_path}"
    )
    for name in summary.violations:
        print(f"VIOLATION {name}")
    return EXIT_FOUND if summary.violations else EXIT_OK


def read_degree_file(path):
    """Header ``V E``, then V vertex degrees, then E endpoint-degree pairs."""
    try:
        tokens = Path(path).read_text().split()
    except OSError as exc:
        raise GroupIOError(path, exc.strerror or str(exc)) from exc
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise InvalidInput(f"{path}: non-integer token ({exc})") from None
    if len(nums) < 2:
        raise InvalidInput(f"{path}: missing 'V E' header")
    v, e = nums[0], nums[1]
    body = nums[2:]
    if len(body) != v + 2 * e:
        raise InvalidInput(f"{path}: expected {v} degrees and {e} pairs, got {len(body)} numbers")
    degrees = body[:v]
    flat = body[v:]
    edges = list(zip(flat[0::2], flat[1::2]))
    return degrees, edges


def cmd_check_generic(args) -> int:
    degrees, edges = read_degree_file(args.degrees)
    v = check_hv_generic(degrees, edges)
    doc = {
        "holds": v.holds,
        "equality": v.equality,
        "lhs": _frac(v.lhs),
        "rhs": _frac(v.rhs),
        "criterion": _frac(v.criterion),
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if v.holds else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sgb", description="Subgroup generating bipartite graphs and their indices")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("report", help="full index report for one group")
    rp.add_argument("--family", choices=("cyclic", "dihedral", "dicyclic"))
    rp.add_argument("--order", type=int, help="group order")
    rp.add_argument("--param", type=int, help="family parameter (Z_P, D_2P, Q_4P)")
    rp.add_argument("--n", type=int, help="raise --param to this power")
    rp.add_argument("--table", help="Cayley table file")
    rp.add_argument("--json", action="store_true", help="print JSON (default unless --dot)")
    rp.add_argument("--dot", metavar="PATH", help="write a Graphviz rendering to PATH")
    rp.set_defaults(func=cmd_report)

    vp = sub.add_parser("verify", help="compare published closed forms with brute force")
    vp.add_argument("--families", required=True, help=f"comma list from {','.join(FAMILIES)}")
    vp.add_argument("--primes", required=True, help="comma list of primes")
    vp.add_argument("--n-max", type=int, default=3, help="largest exponent for cyclic_pn")
    vp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="batch HV counterexample search")
    sp.add_argument("--families", required=True, help=f"comma list from {','.join(SEARCH_FAMILIES)}")
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--out", required=True, help="JSONL output path")
    sp.add_argument("--table", action="append", help="Cayley table file for user_tables (repeatable)")
    sp.add_argument("--resume", action="store_true")
    sp.set_defaults(func=cmd_search)

    cp = sub.add_parser("check-generic", help="HV check for an arbitrary degree-described graph")
    cp.add_argument("--degrees", required=True, help="degree/edge file")
    cp.set_defaults(func=cmd_check_generic)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, InvalidInput, NotAGroup, GroupIOError, ResourceLimit) as exc:
        print(f"sgb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalInconsistency, NotFound) as exc:
        print(f"sgb: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SgbError as exc:
        print(f"sgb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
