"""Command line interface.

Exit codes: 0 success, 1 input error, 2 engine/oracle mismatch,
3 non-convergence of an iterative procedure.
"""
from __future__ import annotations

import argparse
import itertools
import sys

from . import io as wio
from .engine import (
    bernstein_polynomial,
    count_UVW,
    dimension_polynomial,
)
from .errors import ConvergenceError, InputError, VerificationError, WeylDimError
from .groebner import complete_basis
from .oracle import RankOracle


def _add_file(sub):
    sub.add_argument("file", help="presentation document (JSON)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weyldim",
        description="Dimension polynomials of modules over Weyl algebras",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    gb = sp.add_parser("gb", help="multi-order Groebner basis of the relations")
    _add_file(gb)

    dim = sp.add_parser("dimpoly", help="dimension polynomial report")
    _add_file(dim)
    dim.add_argument(
        "--psi-path",
        choices=["auto", "symbolic", "interpolation"],
        default="auto",
        help="how the overshoot part is computed",
    )

    bern = sp.add_parser("bernstein", help="univariate dimension and multiplicity")
    _add_file(bern)

    inv = sp.add_parser("invariants", help="generator-independent invariants")
    _add_file(inv)

    chk = sp.add_parser("check", help="compare engine counts against the rank oracle")
    _add_file(chk)
    chk.add_argument("--rmax", type=int, default=2, help="grid bound per axis")

    ev = sp.add_parser("eval", help="dim M_r by direct enumeration")
    _add_file(ev)
    ev.add_argument("--at", required=True, help="comma-separated bounds r1,...,rp")
    return ap


def _cmd_gb(args) -> int:
    pres = wio.load_presentation(args.file)
    G = complete_basis(pres.relations, pres.P, m=pres.m)
    sys.stdout.write(wio.dumps(wio.basis_doc(G)))
    return 0


def _cmd_dimpoly(args) -> int:
    pres = wio.load_presentation(args.file)
    rep = dimension_polynomial(pres, psi_path=args.psi_path)
    sys.stdout.write(wio.dumps(wio.report_doc(rep)))
    return 0


def _cmd_bernstein(args) -> int:
    pres = wio.load_presentation(args.file)
    rep = bernstein_polynomial(pres)
    sys.stdout.write(wio.dumps(wio.bernstein_doc(rep)))
    return 0


def _cmd_invariants(args) -> int:
    pres = wio.load_presentation(args.file)
    rep = dimension_polynomial(pres)
    sys.stdout.write(wio.dumps(wio.invariants_doc(rep.invariants)))
    return 0


def _cmd_check(args) -> int:
    pres = wio.load_presentation(args.file)
    if args.rmax < 0:
        raise InputError(f"--rmax must be nonnegative, got {args.rmax}")
    rep = dimension_polynomial(pres)
    oracle = RankOracle(pres.P, pres.m, pres.relations)
    points = []
    mismatches = 0
    for r in itertools.product(range(args.rmax + 1), repeat=pres.P.p):
        card_u = count_UVW(rep.basis, pres.m, r)[2]
        rank = oracle.dimension(r)
        phi_val = rep.phi.eval(r)
        must_match = all(a >= b for a, b in zip(r, rep.threshold))
        ok = card_u == rank and (not must_match or phi_val == card_u)
        mismatches += 0 if ok else 1
        points.append(
            {
                "r": list(r),
                "card_u": card_u,
                "rank_dim": rank,
                "phi": phi_val,
                "phi_must_match": must_match,
                "ok": ok,
            }
        )
    doc = {
        "rmax": args.rmax,
        "threshold": list(rep.threshold),
        "points": points,
        "mismatches": mismatches,
    }
    sys.stdout.write(wio.dumps(doc))
    if mismatches:
        raise VerificationError(f"{mismatches} grid points disagree")
    return 0


def _cmd_eval(args) -> int:
    pres = wio.load_presentation(args.file)
    try:
        r = tuple(int(v) for v in args.at.split(","))
    except ValueError:
        raise InputError(f"--at expects integers, got {args.at!r}") from None
    if len(r) != pres.P.p:
        raise InputError(f"--at needs {pres.P.p} bounds, got {len(r)}")
    if any(v < 0 for v in r):
        raise InputError(f"--at bounds must be nonnegative, got {r}")
    G = complete_basis(pres.relations, pres.P, m=pres.m)
    card = count_UVW(G, pres.m, r)[2]
    sys.stdout.write(wio.dumps({"r": list(r), "dim": card}))
    return 0


_COMMANDS = {
    "gb": _cmd_gb,
    "dimpoly": _cmd_dimpoly,
    "bernstein": _cmd_bernstein,
    "invariants": _cmd_invariants,
    "check": _cmd_check,
    "eval": _cmd_eval,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"not converged: {exc}", file=sys.stderr)
        return 3
    except WeylDimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
