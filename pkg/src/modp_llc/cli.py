"""Command line front end.

A JSON report goes to stdout and a short summary to stderr.  Exit codes:
0 success, 1 a check failed, 2 usage or out-of-range input, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .langlands import CrystallineParams, OutOfRangeError, derivation_steps, predict_reduction
from .langlands.reduction import BRANCH_ELIMINATION, main_theorem_prediction
from .modforms import (
    CacheError,
    PrecisionError,
    QExpansionCache,
    default_cache_dir,
    ordinarity_sweep,
    slope_spectrum,
)
from .modforms.qexp import dim_cusp_forms
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _labels(labels) -> list[dict]:
    return [V.to_dict() for V in sorted(labels, key=lambda V: V.key())]


def cmd_predict(args) -> tuple[dict, bool, str]:
    params = CrystallineParams(args.p, args.k, args.ap_val, args.ap_residue, args.psi_residue)
    res = predict_reduction(params)
    if res.ambiguous:
        summary = "Ambiguous: " + " | ".join(str(V) for V in res.labels)
    else:
        summary = f"Determined: {res.label}"
    return {"prediction": res.to_dict()}, True, summary + f"  [{res.branch}]"


def cmd_derive(args) -> tuple[dict, bool, str]:
    d = derivation_steps(args.p, args.k)
    predicted = main_theorem_prediction(args.p, args.k)
    agree = predicted.candidates() == d.candidates
    result = {
        "r": d.r,
        "dim_Y": d.dim_Y,
        "quotient_dim": d.quotient_dim,
        "s": d.label.s,
        "n": d.label.n,
        "candidates": _labels(d.candidates),
        "closed_form": predicted.to_dict(),
        "agreement": "PASS" if agree else "FAIL",
    }
    summary = (f"sigma_r/Y = sigma_{d.label.s}({d.label.n}); candidates: "
               + " | ".join(str(V) for V in sorted(d.candidates, key=lambda V: V.key()))
               + f"; agreement {'PASS' if agree else 'FAIL'}")
    return result, agree, summary


def cmd_verify(args) -> tuple[dict, bool, str]:
    suite = SUITES[args.suite]
    kwargs = {}
    if args.p_max is not None:
        kwargs["p_max"] = args.p_max
    if args.suite == "hecke-identities":
        kwargs["samples"] = args.samples
        kwargs["seed"] = args.seed
    rows = suite(**kwargs)
    ok = all(r.passed for r in rows)
    failed = sum(not r.passed for r in rows)
    return ({"suite": args.suite, "cases": [r.to_dict() for r in rows],
             "passed": len(rows) - failed, "failed": failed},
            ok, f"{args.suite}: {len(rows) - failed}/{len(rows)} PASS")


def _cache(args) -> QExpansionCache | None:
    if args.no_cache:
        return None
    return QExpansionCache(Path(args.cache) if args.cache else default_cache_dir())


def cmd_slopes(args) -> tuple[dict, bool, str]:
    cache = _cache(args)
    if args.sweep_pmax is not None:
        rep = ordinarity_sweep(args.sweep_pmax, cache)
        rows = [{"p": r.p, "k": r.k, "dim": r.dim,
                 "slopes": r.polygon.to_list() if r.polygon else [],
                 "status": "PASS" if r.ordinary else "FAIL"} for r in rep.rows]
        inside = [r for r in rep.rows if r.polygon and r.polygon.in_open_interval(0, 1)]
        summary = "\n".join(r.format() for r in rep.rows)
        summary += "\n" + ("no slopes in (0,1)" if not inside else f"{len(inside)} rows with slopes in (0,1)")
        summary += "; all slopes 0" if rep.all_ordinary else f"; {len(rep.failures())} non-ordinary rows"
        return {"sweep_pmax": args.sweep_pmax, "rows": rows, "all_ordinary": rep.all_ordinary}, \
            rep.all_ordinary, summary
    if args.p is None or args.k is None:
        raise _Usage("slopes needs --p and --k, or --sweep-pmax")
    poly = slope_spectrum(args.p, args.k, args.precision, cache)
    inside = poly.in_open_interval(0, 1)
    return ({"p": args.p, "k": args.k, "dim": dim_cusp_forms(args.k), "slopes": poly.to_list(),
             "slopes_in_open_unit_interval": [f"{s.numerator}/{s.denominator}" for s in inside]},
            True, f"{args.p}, {args.k}, {dim_cusp_forms(args.k)}, {poly.format()}")


PROVENANCE = {
    "predict": "closed-form reduction: ordinary / small-weight / main branches",
    "derive": BRANCH_ELIMINATION + ", compared with the main branch",
    "verify": "finite verification suite",
    "slopes": "Newton polygon of T_p on level 1 cusp forms",
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modp-llc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("predict", help="closed-form reduction of V_{k,a_p}")
    pr.add_argument("--p", type=int, required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--ap-val", type=_fraction, required=True, help="v(a_p) as num/den")
    pr.add_argument("--ap-residue", type=int, help="residue of a_p (needed when v(a_p) = 0)")
    pr.add_argument("--psi-residue", type=int, default=1, help="residue of psi(p) (default 1)")
    pr.set_defaults(func=cmd_predict)

    de = sub.add_parser("derive", help="recompute the reduction from Symm^r / Y")
    de.add_argument("--p", type=int, required=True)
    de.add_argument("--k", type=int, required=True)
    de.set_defaults(func=cmd_derive)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("--suite", choices=sorted(SUITES), required=True)
    ve.add_argument("--p-max", type=int)
    ve.add_argument("--samples", type=int, default=100, help="random elements per (p, r)")
    ve.add_argument("--seed", type=int, default=0)
    ve.set_defaults(func=cmd_verify)

    sl = sub.add_parser("slopes", help="slopes of T_p on S_k, or the ordinarity sweep")
    sl.add_argument("--p", type=int)
    sl.add_argument("--k", type=int)
    sl.add_argument("--precision", type=int, help="q-expansion precision (default p * dim S_k)")
    sl.add_argument("--sweep-pmax", type=int)
    sl.add_argument("--cache", help="cache directory (default $MODP_LLC_CACHE or ~/.cache/modp_llc)")
    sl.add_argument("--no-cache", action="store_true")
    sl.set_defaults(func=cmd_slopes)
    return ap


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    inputs = {k: (str(v) if isinstance(v, Fraction) else v)
              for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    report = {"command": args.command, "inputs": inputs, "provenance": PROVENANCE[args.command]}
    try:
        result, ok, summary = args.func(args)
    except (OutOfRangeError, PrecisionError, _Usage, ValueError) as exc:
        code, msg = EXIT_USAGE, str(exc)
    except (CacheError, OSError) as exc:
        code, msg = EXIT_IO, str(exc)
    else:
        report.update(result=result, status="ok" if ok else "FAIL")
        _emit(report)
        print(summary, file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAIL
    report.update(status="ERROR", error=msg)
    _emit(report)
    print(f"error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
