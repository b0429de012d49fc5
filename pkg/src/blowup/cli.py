"""Command-line entry point.

Dimensions printed by ``shgh-dim`` and ``interp`` are projective:
``dim |D| = h^0(D) - 1``, so -1 means the system is empty.

Exit status: 0 on success, 1 on a domain error, 2 on a usage or parse error.
"""
from __future__ import annotations

import argparse
import math
import csv
import io
import json
import sys
from typing import Sequence

from . import cones, cremona, gallery, interpolation, pell
from .errors import BlowupError
from .picard import DivisorClass, canonical_class, edim, intersect, parse_divisor, vdim
from .shgh import shgh_dim

FORMATS = ("table", "json", "csv")


def _divisor_arg(text: str) -> DivisorClass:
    try:
        return parse_divisor(text)
    except BlowupError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair_arg(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def _render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows({k: "" if v is None else v for k, v in r.items()} for r in rows)
        return buf.getvalue().rstrip("\n")
    cells = [[("" if r[c] is None else str(r[c])) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _render_record(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec, indent=2)
    if fmt == "csv":
        return _render_rows([rec], "csv")
    width = max(len(k) for k in rec)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rec.items())


def cmd_pell_table(args) -> str:
    rows = []
    for k in range(args.k_max + 1):
        rec = pell.pell_divisor(k)
        cv = pell.convergent(10, k)
        row = {
            "k": str(k),
            "p_k": str(cv.p),
            "q_k": str(cv.q),
            "D_k": str(rec.D),
            "c_k": None if rec.c is None else str(rec.c),
            "F_k": None if rec.F is None else str(rec.F),
        }
        if args.format == "json":
            dim = shgh_dim(rec.D)
            row.update(
                vdim_D_k=str(vdim(rec.D)),
                dim_D_k=str(dim.value),
                dim_D_k_status=dim.status.value,
            )
            if rec.F is not None:
                # |h F_k| empty for 0 < h < c_k is only known under SHGH
                row.update(
                    F_k_sq=str(intersect(rec.F, rec.F)),
                    min_effective_multiple=str(rec.c),
                    min_effective_multiple_status=shgh_dim(rec.F).status.value,
                )
        rows.append(row)
    return _render_rows(rows, args.format)


def cmd_vdim(args) -> str:
    D = args.divisor
    if args.format == "table":
        return str(vdim(D))
    return _render_record({"divisor": str(D), "vdim": str(vdim(D)), "edim": str(edim(D))}, args.format)


def cmd_shgh_dim(args) -> str:
    return _render_record(shgh_dim(args.divisor).to_dict(), args.format)


def cmd_interp(args) -> str:
    D = args.divisor
    inst = interpolation.InterpolationInstance.from_divisor(
        D, prime=args.prime, seed=args.seed, trials=args.trials
    )
    report = interpolation.generic_rank(inst)
    rec = {"divisor": str(D), **report.to_dict()}
    if args.cross_check:
        cc = interpolation.cross_check_shgh(D, report=report).to_dict()
        rec.update({f"cross_{k}": v for k, v in cc.items() if k != "divisor"})
    if args.format != "json":
        rec["ranks"] = " ".join(rec["ranks"])
    return _render_record(rec, args.format)


def cmd_cremona_orbit(args) -> str:
    K = canonical_class(args.r)
    rows = [
        {
            "t": str(t),
            "degree": str(A.d),
            "class": str(A),
            "multiplicities": " ".join(str(m) for m in A.mults),
            "self_intersection": str(intersect(A, A)),
            "K_dot_A": str(intersect(K, A)),
        }
        for t, A in enumerate(cremona.degree_growing_orbit(args.r, args.steps))
    ]
    return _render_rows(rows, args.format)


def cmd_cone_bound(args) -> str:
    cone = cones.RationalCone2D(args.v1, args.v2)
    m = cones.effective_multiple_bound(cone, args.r)
    rec: dict = {"m": str(m), "c_sq": str(cones.lattice_distance_constant_sq(cone))}
    if args.verify is not None:
        ok, witness = cones.brute_force_verify(cone, args.r, m, args.verify)
        rec["verified"] = ok
        if witness is not None:
            rec["witness"] = f"{witness[0]},{witness[1]}"
    return _render_record(rec, args.format)


def cmd_gallery(args) -> str:
    if args.family == "kollar":
        rows = [gallery.kollar_record(n, args.b).to_dict() for n in range(args.n_max + 1)
                if math.gcd(n, args.b) == 1]
        return _render_rows(rows, args.format)
    if args.family == "harbourne":
        rows = [r.to_dict() for r in gallery.harbourne_sequence(args.k_max)]
        return _render_rows(rows, args.format)
    if args.family == "rational":
        rows = [gallery.rational_cover_record(A).to_dict()
                for A in cremona.degree_growing_orbit(args.r, args.steps)]
        return _render_rows(rows, args.format)
    rec = {
        "p_a": str(args.pa),
        "alpha": str(args.alpha),
        "bnc_bound": str(gallery.bnc_bound(args.pa, args.alpha)),
        "q4_bound": str(gallery.q4_bound_from_harbourne(args.pa, args.alpha)),
    }
    return _render_record(rec, args.format)


def _add_format(p: argparse.ArgumentParser, default: str = "table") -> None:
    p.add_argument("--format", choices=FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowup",
        description="Divisor classes on blow-ups of the plane, Pell divisors and related bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pell-table", help="Pell divisors D_k = c_k F_k on X_10")
    p.add_argument("--k-max", type=int, default=4)
    _add_format(p)
    p.set_defaults(func=cmd_pell_table)

    p = sub.add_parser("vdim", help="virtual dimension of a class, e.g. '57;18^10'")
    p.add_argument("divisor", type=_divisor_arg)
    _add_format(p)
    p.set_defaults(func=cmd_vdim)

    p = sub.add_parser("shgh-dim", help="dim |D| under the SHGH conjecture")
    p.add_argument("divisor", type=_divisor_arg)
    _add_format(p, "json")
    p.set_defaults(func=cmd_shgh_dim)

    p = sub.add_parser("interp", help="fat-point interpolation rank over F_p")
    p.add_argument("--divisor", type=_divisor_arg, required=True)
    p.add_argument("--prime", type=int, default=interpolation.DEFAULT_PRIME)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cross-check", action="store_true", help="compare with the SHGH verdict")
    _add_format(p)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("cremona-orbit", help="degree-growing Cremona orbit of a line")
    p.add_argument("--r", type=int, default=9)
    p.add_argument("--steps", type=int, default=10)
    _add_format(p)
    p.set_defaults(func=cmd_cremona_orbit)

    p = sub.add_parser("cone-bound", help="effective-multiple bound for a planar rational cone")
    p.add_argument("--v1", type=_pair_arg, required=True)
    p.add_argument("--v2", type=_pair_arg, required=True)
    p.add_argument("--r", type=_pair_arg, required=True, help="integral interior anchor")
    p.add_argument("--verify", type=int, metavar="B", help="brute-force check on the box |xi| <= B")
    _add_format(p, "json")
    p.set_defaults(func=cmd_cone_bound)

    p = sub.add_parser("gallery", help="intersection numbers for the example families")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("kollar")
    q.add_argument("--b", type=int, default=1)
    q.add_argument("--n-max", type=int, default=50)
    _add_format(q)
    q = fam.add_parser("harbourne")
    q.add_argument("--k-max", type=int, default=10)
    _add_format(q)
    q = fam.add_parser("rational")
    q.add_argument("--r", type=int, default=9)
    q.add_argument("--steps", type=int, default=10)
    _add_format(q)
    q = fam.add_parser("bounds")
    q.add_argument("--pa", type=int, default=0)
    q.add_argument("--alpha", type=int, default=1)
    _add_format(q)
    p.set_defaults(func=cmd_gallery)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except BlowupError as exc:
        print(f"blowup {args.command}: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
