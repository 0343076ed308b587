"""
Command-line front end.

Exit status: 0 success, 1 a verification found failures, 2 usage or parse
error.

    schubhess schubert "[3,2,1]"
    schubhess fpoly 2 1
    schubhess verify theorem --n 8 --json
    schubhess hess render "(3,3,4,5,5)"
    schubhess ideal hilbert gens.txt
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hessenberg as hess
from .ideal import contains, groebner, hilbert_from_basis, normal_form, read_ideal_file
from .permutation import parse_permutation
from .polynomial import format_poly, parse
from .schubert import schubert
from .verify import BUDGETS, CHECKS, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def cmd_schubert(args) -> int:
    w = parse_permutation(args.permutation)
    print(format_poly(schubert(w)))
    return EXIT_OK


def cmd_fpoly(args) -> int:
    print(format_poly(hess.f_poly(args.i, args.j)))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_check(args.check, args.n, jobs=args.jobs, unsupported=args.unsupported_n)
    if args.json:
        print(report.to_json(indent=2))
    else:
        print(report.summary())
        for f in report.failures:
            print("  " + "; ".join(f"{k}={v}" for k, v in f.items()))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_hess(args) -> int:
    h = hess.parse_hessenberg(args.h)
    if args.action == "render":
        out = hess.render_grid(h)
    elif args.action == "corners":
        out = " ".join(str(c) for c in hess.corners(h))
    elif args.action == "dim":
        out = str(hess.hess_dimension(h))
    else:
        out = "\n".join(format_poly(g) for g in hess.ideal_generators(h))
    if args.json:
        out = json.dumps({"h": str(h), "action": args.action, "result": out})
    print(out)
    return EXIT_OK


def _load_ideal(args):
    if (args.file is None) == (args.hess is None):
        raise UsageError("give exactly one of FILE or --hess")
    if args.hess is not None:
        h = hess.parse_hessenberg(args.hess)
        return h.n, hess.ideal_generators(h)
    return read_ideal_file(args.file)


def cmd_ideal(args) -> int:
    n, gens = _load_ideal(args)
    G = groebner(gens, n)
    if args.action == "basis":
        result = [format_poly(g) for g in G]
        text = "\n".join(result)
    elif args.action == "hilbert":
        result = hilbert_from_basis(G)
        text = " ".join(map(str, result))
    else:
        if not args.poly:
            raise UsageError("member needs --poly")
        f = parse(args.poly)
        result = {"member": contains(G, f), "normal_form": format_poly(normal_form(f, G))}
        text = f"{str(result['member']).lower()}\nnormal form: {result['normal_form']}"
    print(json.dumps({"action": args.action, "vars": n, "result": result})
          if args.json else text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubhess",
        description="Schubert polynomials and regular nilpotent Hessenberg combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", help="print the Schubert polynomial of a permutation")
    p.add_argument("permutation", help='one-line notation, e.g. "[3,1,2]"')
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("fpoly", help="print the generator f_(i,j)")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("verify", help="run an exhaustive identity sweep")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    p.add_argument("--unsupported-n", action="store_true",
                   help="run past the size budget: "
                        + ", ".join(f"{k}<={v}" for k, v in sorted(BUDGETS.items())))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hess", help="Hessenberg function diagrams and data")
    p.add_argument("action", choices=["render", "corners", "dim", "generators"])
    p.add_argument("h", help='e.g. "(3,3,4,5,5)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hess)

    p = sub.add_parser("ideal", help="Gröbner basis, Hilbert series and membership")
    p.add_argument("action", choices=["basis", "hilbert", "member"])
    p.add_argument("file", nargs="?", help="'vars: n' line then one polynomial per line")
    p.add_argument("--hess", help="use the generators of this Hessenberg function instead")
    p.add_argument("--poly", help="polynomial to test (member)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideal)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, UsageError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"schubhess {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
