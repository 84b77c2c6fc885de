"""Command line front end.

Exit codes: 0 success, 1 conditioning property violated, 2 usage error,
3 undefined result, 4 unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import netio
from .decasteljau import evaluate, evaluate_with_tableau
from .elevation import elevate_to
from .net import TriangularNet
from .patch import tessellate
from .qcore import QParam
from .stability import (
    SUP_NORM_RESOLUTION,
    SingularConversionError,
    compare_conditioning,
    to_bernstein,
    to_qbernstein,
)
from .tribasis import basis_sample_grid, grid_points, in_triangle

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNDEFINED, EXIT_PARSE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def fmt_value(val) -> str:
    val = np.asarray(val)
    return fmt(val) if val.ndim == 0 else " ".join(fmt(c) for c in val)


def _qparam(text: str) -> float:
    try:
        return float(QParam(float(text)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return val


def _load(args) -> tuple[TriangularNet, float]:
    """Read the net file; ``--q`` replaces the stored parameter."""
    nf = netio.load(args.net_file)
    q = nf.q
    if args.q is not None and args.q != nf.q:
        print(
            f"warning: --q {args.q} reinterprets coefficients stored for q={nf.q}; "
            "the represented polynomial changes",
            file=sys.stderr,
        )
        q = args.q
    return nf.net, q


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    net, q = _load(args)
    if not in_triangle(args.u, args.v):
        print(
            f"warning: ({args.u}, {args.v}) lies outside the parameter triangle; "
            "steps are not convex combinations there",
            file=sys.stderr,
        )
    print(fmt_value(evaluate(net, (args.u, args.v), q)))
    if args.tableau:
        for r, layer in enumerate(evaluate_with_tableau(net, (args.u, args.v), q)):
            print(f"layer {r}")
            for (i, j, k), val in layer.items():
                print(f"{i} {j} {k} {fmt_value(val)}")
    return EXIT_OK


def cmd_elevate(args) -> int:
    net, q = _load(args)
    if args.to < net.degree:
        raise UsageError(f"--to {args.to} is below the net degree {net.degree}")
    _emit(netio.dumps(netio.make(elevate_to(net, args.to, q), q)), args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    net, q = _load(args)
    if args.to == "bernstein":
        # the classical basis is the q = 1 member of the family
        result = netio.make(to_bernstein(net, q), 1.0)
    else:
        try:
            result = netio.make(to_qbernstein(net, q), q)
        except SingularConversionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_UNDEFINED
    _emit(netio.dumps(result), args.out)
    return EXIT_OK


def read_points(path) -> list[tuple[float, float]]:
    """Read ``u,v`` (or ``u v``) pairs; blank lines, ``#`` comments and a
    ``u,v`` header are skipped."""
    points = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line or line.replace(" ", "") == "u,v":
                continue
            parts = line.replace(",", " ").split()
            try:
                u, v = (float(x) for x in parts)
            except ValueError:
                raise netio.NetFileError(f"expected 'u,v', got {line!r}", lineno) from None
            points.append((u, v))
    return points


def cmd_cond(args) -> int:
    net, q = _load(args)
    if net.is_points:
        raise UsageError("cond needs a scalar net")
    if args.points:
        points = read_points(args.points)
    elif args.random:
        rng = np.random.default_rng(args.seed)
        points = []
        while len(points) < args.random:
            u, v = rng.random(2)
            if u + v <= 1.0:
                points.append((float(u), float(v)))
    else:
        points = grid_points(args.grid)
    report = compare_conditioning(net, q, points, m=args.sup_res, tol=args.tol)
    print("u,v,cond_bernstein,cond_q,ratio")
    if not report.defined:
        for u, v in report.points:
            print(f"{fmt(u)},{fmt(v)},undefined,undefined,undefined")
        print("# max_ratio=undefined (zero function)")
        return EXIT_UNDEFINED
    for (u, v), cb, cq, ratio in zip(report.points, report.cond_bernstein, report.cond_q, report.ratios):
        print(f"{fmt(u)},{fmt(v)},{fmt(cb)},{fmt(cq)},{fmt(ratio)}")
    print(f"# max_ratio={fmt(report.max_ratio)}")
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_basis_sample(args) -> int:
    n, idx = args.n, (args.i, args.j, args.k)
    if min(idx) < 0 or sum(idx) != n:
        raise UsageError(f"indices {idx} must be nonnegative and sum to {n}")
    q = 1.0 if args.q is None else args.q
    print("u,v,value")
    for u, v, val in basis_sample_grid(n, idx, q, args.m):
        print(f"{fmt(u)},{fmt(v)},{fmt(val)}")
    return EXIT_OK


def cmd_tessellate(args) -> int:
    net, q = _load(args)
    if net.value_shape != (3,):
        raise UsageError("tessellate needs a points3d net")
    _emit(tessellate(net, q, args.m).to_obj(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--q", type=_qparam, default=argparse.SUPPRESS,
        help="override the q stored in the net file (reinterprets the coefficients)",
    )
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="report tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random point sets")

    parser = argparse.ArgumentParser(
        prog="qbezier", parents=[common],
        description="Triangular q-Bernstein bases and q-Bezier patches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a net at (u, v)")
    p.add_argument("net_file")
    p.add_argument("u", type=float)
    p.add_argument("v", type=float)
    p.add_argument("--tableau", action="store_true", help="also print every intermediate layer")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("elevate", parents=[common], help="degree elevation")
    p.add_argument("net_file")
    p.add_argument("--to", type=int, required=True, metavar="M")
    p.add_argument("--out")
    p.set_defaults(func=cmd_elevate)

    p = sub.add_parser(
        "convert", parents=[common], help="change between q-Bernstein and classical Bernstein coefficients",
        description="--to bernstein writes the classical coefficients with q=1 (the classical basis). "
        "--to qbernstein reads the coefficients as classical and solves for the q-Bernstein "
        "coefficients at the file's q (or --q).",
    )
    p.add_argument("net_file")
    p.add_argument("--to", choices=("bernstein", "qbernstein"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("cond", parents=[common], help="conditioning of both representations")
    p.add_argument("net_file")
    where = p.add_mutually_exclusive_group()
    where.add_argument("--points", help="file of u,v pairs")
    where.add_argument("--grid", type=_positive_int, default=8, metavar="M")
    where.add_argument("--random", type=_positive_int, metavar="N", help="N random in-triangle points (see --seed)")
    p.add_argument("--sup-res", type=_positive_int, default=SUP_NORM_RESOLUTION, metavar="M",
                   help="grid resolution of the sup-norm estimate")
    p.set_defaults(func=cmd_cond)

    p = sub.add_parser("basis-sample", parents=[common], help="CSV samples of one basis function (q from --q, default 1)")
    for name in ("n", "i", "j", "k"):
        p.add_argument(name, type=int)
    p.add_argument("-m", type=_positive_int, default=20, help="grid resolution")
    p.set_defaults(func=cmd_basis_sample)

    p = sub.add_parser(
        "tessellate", parents=[common], help="triangulate a 3D patch to OBJ",
        description="Edges: v=0 runs (t, 0), u=0 runs (0, t), w=0 runs (t, 1-t).",
    )
    p.add_argument("net_file")
    p.add_argument("-m", type=_positive_int, default=16, help="grid resolution")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tessellate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("q", None), ("tol", 1e-10), ("seed", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except netio.NetFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
