"""Command-line entry point: ``binorm measure|verify|search|classify|transfer``.

Exit codes: 0 success, 1 counterexample found, 2 usage or parse error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

from . import familyio, search, verifier
from .core import CapacityError, Family, layer_profile, rational_str
from .measures import norm, rho
from .properties import is_antichain, is_down_set, is_intersecting, is_up_set, max_disjoint_members
from .report import VERIFIED, PreconditionError, Stopwatch, VerificationReport

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

THEOREMS = ("lym", "t16", "multilayer", "t22", "t24", "t31", "katona", "p42", "kleitman", "t51")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("BINORM_THREADS", "1"))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(rep: VerificationReport, args) -> int:
    _emit(rep.to_json(timing=not args.no_timing) + "\n", args.out)
    return EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE


def _load(path: str | None) -> tuple[int, list[Family]]:
    if not path:
        raise UsageError("this command needs --file")
    return familyio.load(path)


# ---------------------------------------------------------------- measure

def cmd_measure(args) -> int:
    n, fams = familyio.load(args.file)
    rows = []
    for i, fam in enumerate(fams):
        rows.append({
            "index": i,
            "size": len(fam),
            "norm": rational_str(norm(fam)),
            "rho": rational_str(rho(fam)),
            "layer_profile": [rational_str(x) for x in layer_profile(fam)],
            "antichain": is_antichain(fam),
            "intersecting": is_intersecting(fam),
            "up_set": is_up_set(fam),
            "down_set": is_down_set(fam),
            "matching_number": max_disjoint_members(fam),
        })
    _emit(json.dumps({"n": n, "families": rows}, indent=2) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------- verify

def _need(args, *names) -> None:
    missing = [f"--{x.replace('_', '-')}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"--theorem {args.theorem} in {args.mode} mode needs {', '.join(missing)}")


def _verify_instance(args) -> VerificationReport:
    tid = args.theorem
    if tid == "p42" and not args.file:
        return _classification_report(args)
    n, fams = _load(args.file)
    if not fams:
        raise UsageError("the file holds no families")
    one_each = {
        "lym": verifier.lym_report,
        "t31": verifier.verify_boundary,
        "katona": lambda f: verifier.verify_union_bounds(f, args.w),
        "p42": lambda f: verifier.verify_size_norm(f, args.l, args.norm_mode),
        "kleitman": lambda f: verifier.verify_kleitman_sizes(f, args.s),
    }
    if tid in one_each:
        if tid == "katona":
            _need(args, "w")
        elif tid == "p42":
            _need(args, "l")
        elif tid == "kleitman":
            _need(args, "s")
        reports = [one_each[tid](f) for f in fams]
        return reports[0] if len(reports) == 1 else verifier.merge_reports(reports)
    if tid == "t16":
        return verifier.verify_cross_norm(fams)
    if tid == "multilayer":
        _need(args, "ks", "r")
        return verifier.verify_multilayer(fams, args.ks, args.r)
    if tid == "t22":
        _need(args, "d")
        return verifier.verify_d_cross(fams, args.d)
    if tid == "t24":
        return verifier.verify_box_lower(fams)
    if tid == "t51":
        return verifier.verify_cross_size_sum(fams)
    raise UsageError(f"unknown theorem {tid!r}")


def _classification_report(args) -> VerificationReport:
    _need(args, "n", "l")
    sw = Stopwatch()
    n, l = args.n, args.l
    cls = verifier.classify_pair(n, l)
    checks = {str(k): verifier.layer_sum_exceeds(n, l, k) for k in range(l + 1, n)}
    return VerificationReport(
        theorem_id="p42",
        params={"n": n, "l": l, "mode": "instance"},
        status=VERIFIED,
        cases_checked=len(checks),
        runtime_ms=sw.ms(),
        details={"classification": cls.value, "layer_sum_checks": checks,
                 "ratio_exceeds_four": verifier.ratio_exceeds_four(n, l)},
    )


def _verify_exhaustive(args) -> VerificationReport:
    tid = args.theorem
    _need(args, "n")
    n = args.n
    if tid in ("t16", "multilayer", "kleitman", "t51"):
        _need(args, "s")
    if tid == "lym":
        return verifier.sweep_lym(n)
    if tid == "t16":
        return search.max_norm_sum_cross_dependent(n, args.s)
    if tid == "multilayer":
        return verifier.sweep_multilayer(n, args.s)
    if tid == "t22":
        return verifier.sweep_d_cross(n)
    if tid == "t24":
        return verifier.sweep_box_lower(n)
    if tid == "t31":
        return verifier.sweep_boundary(n)
    if tid == "katona":
        ws = [args.w] if args.w is not None else list(range(n))
        reps = [verifier.sweep_union_bounds(n, w) for w in ws]
        return reps[0] if len(reps) == 1 else verifier.merge_reports(reps)
    if tid == "p42":
        _need(args, "l")
        rep = verifier.sweep_size_norm(n, args.l, args.norm_mode)
        rep.details["classification"] = rep.details.pop("lemma_classification")
        return rep
    if tid == "kleitman":
        return search.max_size_no_s_disjoint(n, args.s)
    if tid == "t51":
        return verifier.sweep_cross_size_sum(n, args.s)
    raise UsageError(f"unknown theorem {tid!r}")


def _verify_sample(args) -> VerificationReport:
    _need(args, "n", "seed")
    extra = {}
    if args.theorem == "katona" and args.w is not None:
        extra["w"] = args.w
    if args.theorem == "p42":
        extra["l"] = 1 if args.l is None else args.l
        extra["norm_mode"] = args.norm_mode
    s = args.s if args.s is not None else (3 if args.theorem == "kleitman" else 2)
    return verifier.sample_sweep(args.theorem, args.n, args.samples, args.seed, s=s, **extra)


def cmd_verify(args) -> int:
    handler = {"instance": _verify_instance, "exhaustive": _verify_exhaustive, "sample": _verify_sample}
    return _emit_report(handler[args.mode](args), args)


# ---------------------------------------------------------------- search, classify, transfer

def cmd_search(args) -> int:
    if args.kind == "max-norm-sum":
        rep = search.max_norm_sum_cross_dependent(args.n, args.s)
    else:
        rep = search.max_size_no_s_disjoint(args.n, args.s)
    return _emit_report(rep, args)


def cmd_classify(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min must not exceed --n-max")
    out = sys.stdout if not args.out else open(args.out, "w", newline="", encoding="utf-8")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "l", "class"])
        for n in range(args.n_min, args.n_max + 1):
            top = n - 1 if args.l_max is None else min(args.l_max, n - 1)
            for l in range(args.l_min, top + 1):
                writer.writerow([n, l, verifier.classify_pair(n, l).value])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_transfer(args) -> int:
    from .transfer import exact_gamma, sample_gamma

    n, fams = _load(args.file)
    if args.exact:
        gamma = exact_gamma(fams, args.ks, args.r)
        payload = {"n": n, "ks": args.ks, "r": args.r, "exact": True,
                   "gamma": [[rational_str(x) for x in row] for row in gamma]}
    else:
        if args.seed is None:
            raise UsageError("Monte Carlo estimation needs --seed")
        est = sample_gamma(fams, args.ks, args.r, args.samples, args.seed, threads=_threads(args))
        payload = {"n": n, "ks": args.ks, "r": args.r, "exact": False, "samples": est.samples,
                   "seed": est.seed, "mean": est.mean.tolist(), "stderr": est.stderr.tolist()}
    payload["target"] = [[rational_str(layer_profile(f)[k + j]) for j in range(args.r + 1)]
                         for f, k in zip(fams, args.ks)]
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binorm", description="Exact checks of binomial-norm inequalities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $BINORM_THREADS or 1); never changes the output")
    common.add_argument("--no-timing", action="store_true", help="write runtime_ms as 0 for byte-stable reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="norm, rho, layer profile and properties of each family")
    p.add_argument("file")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("verify", parents=[common], help="check one inequality on a file, exhaustively or by sampling")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--mode", default="instance", choices=("instance", "exhaustive", "sample"))
    p.add_argument("--file")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--ks", type=_int_list)
    p.add_argument("--r", type=int)
    p.add_argument("--norm-mode", default="perfect", choices=("perfect", "quasi"))
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exact extremal values by exhaustive search")
    p.add_argument("--kind", required=True, choices=("max-size-no-disjoint", "max-norm-sum"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", parents=[common], help="CSV table of (n, l) classes")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--l-min", type=int, default=0)
    p.add_argument("--l-max", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transfer", parents=[common], help="induced layer densities under random partitions")
    p.add_argument("--file", required=True)
    p.add_argument("--ks", type=_int_list, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="enumerate all partitions (n <= 8)")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_transfer)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"binorm: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, familyio.FamilyFileError, PreconditionError, ValueError, OSError) as exc:
        print(f"binorm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
