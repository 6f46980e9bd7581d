"""Command-line front end.

Subcommands: ``verify`` runs a classification driver and prints its
report, ``parabolic solve`` prints the candidates of one elimination
instance, ``capacity`` answers diameter and product-bound queries, and
``render`` writes an escape-time image. Reports go to stdout as JSON
unless ``--out`` names a file. Exit codes: 0 success, 1 a certificate
step failed, 2 usage error, 3 instance over the internal cap. The
environment variable MULTIBROT_BITS sets the default working precision
for the interval subcommands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .capacity import dn_interval, fekete_oracle, inequality_41
from .certificates import theorem_11_driver, theorem_12_driver, theorem_13_driver
from .parabolic import solve_parabolic
from .render import RenderSpec, render

__all__ = ["main", "RenderSpec", "render"]


def _default_bits() -> int:
    raw = os.environ.get("MULTIBROT_BITS", "128")
    try:
        bits = int(raw)
    except ValueError:
        raise ValueError(f"MULTIBROT_BITS must be an integer, got {raw!r}")
    if bits < 8:
        raise ValueError("MULTIBROT_BITS must be at least 8")
    return bits


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="multibrot",
        description="exact classification tools for the families z^d + c",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a classification driver")
    verify.add_argument("theorem", choices=("thm11", "thm12", "thm13"))
    verify.add_argument("--d-min", type=int, default=None)
    verify.add_argument("--d-max", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=3)
    verify.add_argument("--out", default=None)

    para = sub.add_parser("parabolic", help="cycle parameter queries")
    para_sub = para.add_subparsers(dest="action", required=True)
    solve = para_sub.add_parser("solve", help="parameters with a given cycle")
    solve.add_argument("--d", type=int, required=True)
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--lambda", dest="lam", type=int, required=True,
                       choices=(1, -1))
    solve.add_argument("--out", default=None)

    cap = sub.add_parser("capacity", help="diameter and product bounds")
    cap_sub = cap.add_subparsers(dest="action", required=True)
    dn = cap_sub.add_parser("dn", help="certified n-th diameter of [a, b]")
    dn.add_argument("--a", required=True)
    dn.add_argument("--b", required=True)
    dn.add_argument("--n", type=int, required=True)
    dn.add_argument("--bits", type=int, default=None)
    dn.add_argument("--out", default=None)
    fk = cap_sub.add_parser("fekete", help="numerical extremal configuration")
    fk.add_argument("--n", type=int, required=True)
    fk.add_argument("--a", default="-1")
    fk.add_argument("--b", default="1")
    fk.add_argument("--restarts", type=int, default=8)
    fk.add_argument("--seed", type=int, default=0)
    fk.add_argument("--out", default=None)
    iq = cap_sub.add_parser("ineq41", help="certified sigma(d) tau(n) vs 1")
    iq.add_argument("--d", type=int, required=True)
    iq.add_argument("--n", type=int, required=True)
    iq.add_argument("--bits", type=int, default=None)
    iq.add_argument("--out", default=None)

    rd = sub.add_parser("render", help="escape-time image")
    rd.add_argument("--d", type=int, required=True)
    rd.add_argument("--center", default=None,
                    help="re,im (default -0.75,0 at d=2, else 0,0)")
    rd.add_argument("--width", type=float, default=3.2)
    rd.add_argument("--res", default="800x800", help="WxH pixels")
    rd.add_argument("--max-iter", type=int, default=1000)
    rd.add_argument("--palette", type=int, default=0)
    rd.add_argument("--out", default=None)
    return ap


def _run_verify(args) -> int:
    if args.theorem == "thm11":
        rep = theorem_11_driver(
            args.d_min if args.d_min is not None else 2,
            args.d_max if args.d_max is not None else 9,
        )
    elif args.theorem == "thm12":
        rep = theorem_12_driver()
    else:
        rep = theorem_13_driver(
            args.d_min if args.d_min is not None else 3,
            args.d_max if args.d_max is not None else 10,
            args.n_max,
        )
    _emit(rep.to_json(), args.out)
    return 0 if rep.verdict == "pass" else 1


def _run_parabolic(args) -> int:
    cands = solve_parabolic(args.d, args.n, args.lam)
    _emit({
        "d": args.d,
        "n": args.n,
        "lambda": args.lam,
        "candidates": [c.to_json() for c in cands],
    }, args.out)
    return 0


def _run_capacity(args) -> int:
    if args.action == "dn":
        bits = args.bits if args.bits is not None else _default_bits()
        iv = dn_interval(Fraction(args.a), Fraction(args.b), args.n, bits)
        _emit({
            "a": args.a, "b": args.b, "n": args.n, "bits": bits,
            "enclosure": [str(iv.lo), str(iv.hi)],
        }, args.out)
    elif args.action == "fekete":
        res = fekete_oracle(Fraction(args.a), Fraction(args.b), args.n,
                            restarts=args.restarts, seed=args.seed)
        _emit({
            "a": args.a, "b": args.b, "n": args.n, "seed": args.seed,
            "points": list(res.points),
            "log_product": res.log_product,
            "dn_estimate": res.dn_estimate(),
            "restarts_used": res.restarts_used,
        }, args.out)
    else:
        bits = args.bits if args.bits is not None else _default_bits()
        v = inequality_41(args.d, args.n, bits)
        out = v.to_json()
        out["bits_used"] = v.bits_used
        _emit(out, args.out)
    return 0


def _run_render(args) -> int:
    if args.center is not None:
        try:
            re_s, im_s = args.center.split(",")
            center = (float(re_s), float(im_s))
        except ValueError:
            raise ValueError("--center expects re,im")
    else:
        center = (-0.75, 0.0) if args.d == 2 else (0.0, 0.0)
    try:
        w_s, h_s = args.res.lower().split("x")
        res = (int(w_s), int(h_s))
    except ValueError:
        raise ValueError("--res expects WxH, e.g. 800x800")
    spec = RenderSpec(
        d=args.d, center_re=center[0], center_im=center[1],
        width=args.width, px_w=res[0], px_h=res[1],
        max_iter=args.max_iter, palette=args.palette,
    )
    out = args.out if args.out is not None else f"multibrot-d{args.d}.ppm"
    path = render(spec, out)
    print(path)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "parabolic":
            return _run_parabolic(args)
        if args.command == "capacity":
            return _run_capacity(args)
        return _run_render(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if "instance too large" in str(exc) else 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
