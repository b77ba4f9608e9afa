"""Command line front end.

    invbounds hilbert-basis --matrix A.json [--budget N] [--method auto|completion|fast]
    invbounds degree-bounds --matrix A.json [--budget N]
    invbounds certify-orbit --point p.json --mode symbolic|numeric [--norms n.json] [--stabilizer]
    invbounds reproduce cubic|tensor --n K [--json out.json] [--markdown out.md]

Each subcommand is also installed as its own executable (``hilbert-basis``,
``degree-bounds``, ``certify-orbit``, ``reproduce``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import degree_bounds
from .errors import InvBoundsError
from .hilbert import DEFAULT_BUDGET, hilbert_basis
from .linalg import matrix_from_json
from .orbit import certify_closed_orbit, stabilizer_check
from .reps import LieAlgebra, point_from_json
from .reproduce import reproduce_cubic, reproduce_tensor


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _integer_matrix(obj) -> tuple[list[list[int]], int]:
    rows = matrix_from_json(obj)
    out = []
    for row in rows:
        ints = []
        for x in row:
            if not isinstance(x, Fraction) or x.denominator != 1:
                raise ValueError(f"weight matrices must have integer entries, got {x}")
            ints.append(int(x))
        out.append(ints)
    return out, int(obj.get("cols", len(out[0]) if out else 0))


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_hilbert(args) -> int:
    A, cols = _integer_matrix(_load_json(args.matrix))
    hb = hilbert_basis(A, budget=args.budget, method=args.method, cols=cols)
    _emit(hb.to_json())
    return 0


def _cmd_bounds(args) -> int:
    A, cols = _integer_matrix(_load_json(args.matrix))
    if not A:
        raise ValueError("degree-bounds needs at least one weight row")
    rep = degree_bounds(A, budget=args.budget)
    _emit(rep.to_json())
    return 0


def _cmd_certify(args) -> int:
    point = point_from_json(_load_json(args.point))
    norms = _load_json(args.norms) if args.norms else None
    cert = certify_closed_orbit(point, mode=args.mode, norms=norms)
    out = cert.to_json()
    out["id"] = cert.digest()
    if args.stabilizer:
        algebra = LieAlgebra.for_space(point.space, joint_trace=args.joint_trace)
        out["stabilizer"] = stabilizer_check(point, algebra).to_json()
    _emit(out)
    return 0 if cert.passed else 1


def _cmd_reproduce(args) -> int:
    run = reproduce_cubic if args.scenario == "cubic" else reproduce_tensor
    report = run(args.n, budget=args.budget)
    text = report.dumps()
    if args.json:
        Path(args.json).write_text(text + "\n")
    if args.markdown:
        Path(args.markdown).write_text(report.to_markdown())
    if not args.json:
        sys.stdout.write(text + "\n")
    status = "PASS" if report.passed else f"FAIL ({report.failed_stage})"
    print(f"{args.scenario} n={args.n}: bound {report.bound} [{status}]", file=sys.stderr)
    return 0 if report.passed else 1


def _add_hilbert(p):
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="completion node budget")
    p.add_argument("--method", choices=("auto", "completion", "fast"), default="auto")
    p.set_defaults(func=_cmd_hilbert)


def _add_bounds(p):
    p.add_argument("--matrix", required=True, help="weight matrix JSON file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_bounds)


def _add_certify(p):
    p.add_argument("--point", required=True, help="point JSON file")
    p.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    p.add_argument("--norms", help="JSON map from norm class to squared norm (numeric mode)")
    p.add_argument("--stabilizer", action="store_true", help="also report the Lie stabilizer dimension")
    p.add_argument(
        "--joint-trace",
        action="store_true",
        help="use the algebra with one joint trace condition instead of a product of sl's",
    )
    p.set_defaults(func=_cmd_certify)


def _add_reproduce(p):
    p.add_argument("scenario", choices=("cubic", "tensor"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", help="write the JSON report here instead of stdout")
    p.add_argument("--markdown", help="also write a Markdown summary here")
    p.set_defaults(func=_cmd_reproduce)


_COMMANDS = {
    "hilbert-basis": (_add_hilbert, "minimal generators of the nonnegative kernel monoid"),
    "degree-bounds": (_add_bounds, "beta and sigma of a torus weight matrix"),
    "certify-orbit": (_add_certify, "closed-orbit certificate for a point"),
    "reproduce": (_add_reproduce, "end-to-end cubic or tensor lower-bound run"),
}


def _run(parser: argparse.ArgumentParser, argv) -> int:
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvBoundsError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="invbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (add, help_text) in _COMMANDS.items():
        add(sub.add_parser(name, help=help_text))
    return _run(parser, argv)


def _single(name: str):
    def entry(argv=None) -> int:
        add, help_text = _COMMANDS[name]
        parser = argparse.ArgumentParser(prog=name, description=help_text)
        add(parser)
        return _run(parser, argv)

    return entry


hilbert_basis_main = _single("hilbert-basis")
degree_bounds_main = _single("degree-bounds")
certify_orbit_main = _single("certify-orbit")
reproduce_main = _single("reproduce")


if __name__ == "__main__":
    sys.exit(main())
