"""Command-line interface.

Verbs: ``enum`` (diagram enumeration), ``poly`` (the polynomial by any of
the three routes), ``stats`` (cancellation statistics and sweeps),
``verify`` (invariant suites) and ``render`` (ASCII/SVG drawings).

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import analysis, moves, oracle
from .diagram import canonical_key, diagram_from_text, diagram_to_text
from .errors import NotABijection, OutOfRange, SizeLimit
from .perm import embed, enumerate_symmetric_group, parse_permutation
from .render import render_ascii, render_svg

USAGE_ERROR = 2
CHECK_FAILED = 1


def _perm(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except NotABijection as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _sorted_diagrams(ds):
    return sorted(ds, key=canonical_key)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def cmd_enum(args) -> int:
    w = _perm(args.perm)
    ds = moves.enumerate_unpaired(w) if args.unpaired else moves.enumerate_qbpds(w)
    print(len(ds))
    if not args.count:
        body = "\n".join(diagram_to_text(D) for D in _sorted_diagrams(ds))
        _write(body, args.out)
    return 0


def cmd_poly(args) -> int:
    w = _perm(args.perm)
    if args.mode == "qbpd":
        p = analysis.qbpd_polynomial(w)
    elif args.mode == "oracle":
        p = oracle.quantum_double_schubert_defining(w)
    else:
        p = oracle.quantum_double_schubert_transition(w)
    if args.specialize:
        families = {s.strip() for s in args.specialize.split(",") if s.strip()}
        bad = families - {"y", "q"}
        if bad:
            print(f"error: unknown specialization {sorted(bad)}", file=sys.stderr)
            return USAGE_ERROR
        p = p.specialize(zero_y="y" in families, zero_q="q" in families)
    if args.format == "json":
        _write(json.dumps(p.to_json_dict(), indent=None) + "\n", args.out)
    else:
        _write(p.canonical_text() + "\n", args.out)
    return 0


def _stats_text(s) -> str:
    return (
        f"{s.poly_monomials},{s.qbpd_monomials},{s.cancellations},{s.qbpd_count}"
    )


def _stats_dict(s) -> dict:
    return {
        "perm": s.perm.to_text(),
        "poly_monomials": s.poly_monomials,
        "qbpd_monomials": s.qbpd_monomials,
        "cancellations": s.cancellations,
        "qbpd_count": s.qbpd_count,
    }


CSV_HEADER = "perm,poly_monomials,qbpd_monomials,cancellations,qbpd_count"


def cmd_stats(args) -> int:
    if bool(args.n) == bool(args.perm):
        print("error: give exactly one of --n or --perm", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.perm:
            s = analysis.cancellation_stats(_perm(args.perm))
            if args.format == "csv":
                _write(f"{CSV_HEADER}\n{s.perm.to_text()},{_stats_text(s)}\n", args.out)
            elif args.format == "json":
                _write(json.dumps(_stats_dict(s)) + "\n", args.out)
            else:
                _write(_stats_text(s) + "\n", args.out)
            return 0
        rows = analysis.stats_for_group(args.n, jobs=args.jobs, force=args.force)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    total = sum(s.cancellations for s in rows)
    best = max(
        rows, key=lambda s: (s.cancellations, tuple(-v for v in s.perm.images))
    )
    if args.format == "csv":
        lines = [CSV_HEADER]
        lines += [f"{s.perm.to_text()},{_stats_text(s)}" for s in rows]
        _write("\n".join(lines) + "\n", args.out)
    elif args.format == "json":
        _write(
            json.dumps(
                {
                    "n": args.n,
                    "total": total,
                    "average": total / len(rows),
                    "max": best.cancellations,
                    "argmax": best.perm.to_text(),
                    "rows": [_stats_dict(s) for s in rows],
                }
            )
            + "\n",
            args.out,
        )
    else:
        _write(
            f"S_{args.n} total={total} average={total / len(rows):.3f}"
            f" max={best.cancellations} argmax={best.perm.to_text()}\n",
            args.out,
        )
    return 0


def _verify_perms(n, sample, seed):
    perms = list(enumerate_symmetric_group(n))
    if sample and sample < len(perms):
        perms = random.Random(seed).sample(perms, sample)
    return perms


def cmd_verify(args) -> int:
    n = args.n
    failures = []
    checked = 0
    if args.check == "theorem":
        for w in _verify_perms(n, args.sample, args.seed):
            t = analysis.qbpd_polynomial(w)
            checked += 1
            if t != oracle.quantum_double_schubert_defining(w):
                failures.append(f"{w}: weight sum differs from defining formula")
            elif t != oracle.quantum_double_schubert_transition(w):
                failures.append(f"{w}: weight sum differs from transition recursion")
    elif args.check == "transition":
        for w in _verify_perms(n, args.sample, args.seed):
            if w.is_identity():
                continue
            checked += 1
            if not analysis.verify_transition(w).is_zero():
                failures.append(f"{w}: nonzero transition residual")
    elif args.check == "monk":
        for w in enumerate_symmetric_group(n):
            for k in range(1, n):
                checked += 1
                if not oracle.monk_residual(k, w).is_zero():
                    failures.append(f"k={k}, {w}: nonzero Monk residual")
    elif args.check == "closure":
        for w in enumerate_symmetric_group(n):
            checked += 1
            if moves.enumerate_qbpds(w) != moves.brute_force_enumerate(w):
                failures.append(f"{w}: move closure differs from brute force")
    else:  # stability
        for w in enumerate_symmetric_group(n):
            checked += 1
            lifted = analysis.qbpd_polynomial(embed(w, n + 1))
            if lifted != analysis.qbpd_polynomial(w).embed(n + 1):
                failures.append(f"{w}: weight sum not stable under embedding")
    for line in failures:
        print(f"FAIL {line}")
    status = "ok" if not failures else f"{len(failures)} failures"
    print(f"{args.check} n={n}: {checked} checks, {status}")
    return 0 if not failures else CHECK_FAILED


def cmd_render(args) -> int:
    if os.path.exists(args.target):
        with open(args.target, encoding="utf-8") as fh:
            blocks = [b for b in fh.read().split("\n\n") if b.strip()]
        try:
            ds = [diagram_from_text(b) for b in blocks]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
    else:
        w = _perm(args.target)
        pool = (
            moves.enumerate_unpaired(w)
            if args.unpaired
            else moves.enumerate_qbpds(w)
        )
        ds = _sorted_diagrams(pool)
    if not 1 <= args.index <= len(ds):
        print(
            f"error: index {args.index} out of range 1..{len(ds)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    D = ds[args.index - 1]
    text = render_svg(D) if args.format == "svg" else render_ascii(D)
    _write(text, args.out)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qbpd",
        description="Enumerate quantum bumpless pipe dreams and their polynomials.",
    )
    ap.add_argument("--jobs", type=int, default=None, help="worker processes")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enum", help="enumerate the diagrams of a permutation")
    p.add_argument("perm")
    p.add_argument("--unpaired", action="store_true", help="skip domino pairings")
    p.add_argument("--count", action="store_true", help="print the count only")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_enum)

    p = sub.add_parser("poly", help="print the quantum double Schubert polynomial")
    p.add_argument("perm")
    p.add_argument(
        "--mode", choices=("qbpd", "oracle", "transition"), default="qbpd"
    )
    p.add_argument("--specialize", help="comma-separated families to zero: y,q")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("stats", help="cancellation statistics")
    p.add_argument("--n", type=int)
    p.add_argument("--perm")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--force", action="store_true", help="allow n > 6")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument(
        "check",
        choices=("theorem", "transition", "monk", "closure", "stability"),
    )
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="draw a diagram")
    p.add_argument("target", help="permutation or serialized diagram file")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--index", type=int, default=1, help="1-based, canonical order")
    p.add_argument("--unpaired", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OutOfRange, SizeLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
