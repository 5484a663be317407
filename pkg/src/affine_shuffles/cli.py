"""Command-line interface.

Subcommands:

* ``measure``  -- print an affine k-shuffle measure (or one coefficient);
* ``verify``   -- run a named verification check or the whole battery;
* ``sample``   -- draw from one of the shuffle models with a fixed seed;
* ``unimodal`` -- list unimodal permutations or their shape histogram.

Global flags ``--json``, ``--csv``, ``--out PATH`` and ``--decimal DIGITS``
control output.  All numbers are exact rationals rendered as "a/b" unless
``--decimal`` asks for rounded decimals.  Exit status is nonzero iff a
verification check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import cellini, closed_forms, harness, series, shuffles, unimodal
from .perm import Permutation, SignedPermutation
from .report import VerificationReport


def _render_fraction(value: Fraction, decimal: int | None) -> str:
    if decimal is not None:
        return f"{float(value):.{decimal}f}"
    return f"{value.numerator}/{value.denominator}"


class _Output:
    def __init__(self, args: argparse.Namespace):
        self.as_json = args.json
        self.as_csv = args.csv
        self.path = args.out
        self.decimal = args.decimal

    def emit(self, text: str) -> None:
        if self.path:
            with open(self.path, "w", encoding="utf-8") as handle:
                handle.write(text if text.endswith("\n") else text + "\n")
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

    def emit_json(self, payload) -> None:
        self.emit(json.dumps(payload, indent=2, sort_keys=True))

    def emit_csv(self, header: list[str], rows: list[list[str]]) -> None:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(header)
        writer.writerows(rows)
        self.emit(buffer.getvalue())


def _cmd_measure(args: argparse.Namespace, out: _Output) -> int:
    family, n, k = args.family, args.n, args.k
    if args.element is not None:
        if family == "A":
            value = closed_forms.x_k_type_a(Permutation.from_text(args.element), k)
        else:
            value = closed_forms.x_k_type_c(SignedPermutation.from_text(args.element), k)
        if out.as_json:
            out.emit_json({"family": family, "n": n, "k": k,
                           "element": args.element,
                           "coefficient": _render_fraction(value, out.decimal)})
        else:
            out.emit(_render_fraction(value, out.decimal))
        return 0
    if family == "A":
        element = closed_forms.x_k_measure_type_a(n, k)
    else:
        element = closed_forms.x_k_measure_type_c(n, k)
    items = sorted(element.coeffs.items(), key=lambda kv: kv[0].images)
    if out.as_json:
        out.emit_json({
            "family": family, "n": n, "k": k,
            "masses": {w.to_text(): _render_fraction(c, out.decimal) for w, c in items},
        })
    elif out.as_csv:
        out.emit_csv(["element", "mass"],
                     [[w.to_text(), _render_fraction(c, out.decimal)] for w, c in items])
    else:
        out.emit("\n".join(f"{w.to_text()}\t{_render_fraction(c, out.decimal)}" for w, c in items))
    return 0


def _run_named_checks(name: str, profile_name: str) -> list[VerificationReport]:
    profile = harness.PROFILES[profile_name]
    if name == "all":
        return harness.verify_all(profile_name)
    reports: list[VerificationReport] = []
    if name == "dmp":
        for n, q in profile.dmp_a:
            reports.append(harness.verify_dmp("A", n, q))
        for n, q in profile.dmp_c:
            reports.append(harness.verify_dmp("C", n, q))
    elif name == "cellini":
        for family, n, k, h in profile.cellini_cases:
            rs = (cellini.RootSystem.type_a(n) if family == "A"
                  else cellini.RootSystem.type_c(n))
            reports.append(cellini.verify_cellini_properties(rs, k, h))
    elif name == "tv":
        for n, k in profile.tv_cases:
            reports.append(shuffles.theorem_tv_check(n, k))
    elif name == "gannon":
        for n in profile.gannon_sizes:
            reports.append(harness.verify_gannon(n))
    elif name == "reciprocity":
        bound = profile.reciprocity_formula_max
        brute_bound = profile.reciprocity_brute_max
        for n in range(2, bound + 1):
            for q in range(2, bound + 1):
                reports.append(harness.verify_reciprocity(
                    n, q, brute=n <= brute_bound and q <= brute_bound))
    elif name == "reiner":
        reports.append(series.reiner_identity_check(*profile.reiner))
    else:
        raise ValueError(f"unknown check {name!r}")
    reports.sort(key=lambda r: (r.check_name, repr(r.parameters)))
    return reports


def _cmd_verify(args: argparse.Namespace, out: _Output) -> int:
    reports = _run_named_checks(args.check, args.profile)
    failures = [r for r in reports if not r.passed]
    if out.as_json:
        out.emit_json([r.as_dict() for r in reports])
    elif out.as_csv:
        rows = [
            [r.check_name, json.dumps(r.as_dict()["parameters"], sort_keys=True),
             r.status, f"{r.elapsed:.4f}", r.notes]
            for r in reports
        ]
        out.emit_csv(["check", "parameters", "status", "elapsed", "notes"], rows)
    else:
        lines = []
        for r in reports:
            params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
            line = f"{r.status.upper():4s} {r.check_name} ({params}) [{r.elapsed * 1000:.1f} ms]"
            if r.notes:
                line += f" -- {r.notes}"
            if r.witness is not None:
                line += f" witness: {r.as_dict()['witness']}"
            lines.append(line)
        lines.append(f"{len(reports) - len(failures)}/{len(reports)} checks passed")
        out.emit("\n".join(lines))
    return 1 if failures else 0


def _cmd_sample(args: argparse.Namespace, out: _Output) -> int:
    rng = random.Random(args.seed)
    lines = []
    for _ in range(args.count):
        if args.model == "riffle":
            element = shuffles.riffle_sample(args.n, args.k, rng)
        elif args.model == "affine-a":
            element = shuffles.affine_a_2shuffle_sample(args.n, rng)
        else:
            element = shuffles.affine_c_shuffle_sample(args.n, args.k, rng)
        lines.append(element.to_text())
    if out.as_json:
        out.emit_json({"model": args.model, "n": args.n, "k": args.k,
                       "seed": args.seed, "draws": lines})
    else:
        out.emit("\n".join(lines))
    return 0


def _cmd_unimodal(args: argparse.Namespace, out: _Output) -> int:
    n = args.n
    if args.histogram:
        histogram = unimodal.gannon_histogram(n)
        rendered = []
        for key, count in sorted(histogram.items(), key=lambda item: repr(item[0])):
            shapes = ";".join(f"{shape!r}x{mult}" for shape, mult in key)
            rendered.append((shapes, count))
        if out.as_json:
            out.emit_json({"n": n, "histogram": {s: c for s, c in rendered}})
        elif out.as_csv:
            out.emit_csv(["shapes", "count"], [[s, str(c)] for s, c in rendered])
        else:
            out.emit("\n".join(f"{s}\t{c}" for s, c in rendered))
        return 0
    perms = unimodal.enumerate_unimodal(n)
    lines = [w.to_text() for w in sorted(perms, key=lambda w: w.images)]
    if out.as_json:
        out.emit_json({"n": n, "count": len(lines), "permutations": lines})
    else:
        out.emit("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-shuffles",
        description="Exact affine shuffle measures, card-shuffling models, and identity checks",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--csv", action="store_true", help="emit CSV where applicable")
    parser.add_argument("--out", metavar="PATH", help="write output to a file")
    parser.add_argument("--decimal", type=int, metavar="DIGITS",
                        help="render rationals as decimals with this many digits")
    sub = parser.add_subparsers(dest="command", required=True)

    measure = sub.add_parser("measure", help="affine k-shuffle measure")
    measure.add_argument("--family", choices=("A", "C"), required=True)
    measure.add_argument("--n", type=int, required=True)
    measure.add_argument("--k", type=int, required=True)
    measure.add_argument("--element", help="one-line form, e.g. 3,1,-2,4,5")

    verify = sub.add_parser("verify", help="run verification checks")
    verify.add_argument(
        "check",
        choices=("dmp", "cellini", "tv", "gannon", "reciprocity", "reiner", "all"),
    )
    verify.add_argument("--profile", choices=("quick", "full"), default="quick")

    sample = sub.add_parser("sample", help="draw from a shuffle model")
    sample.add_argument("--model", choices=("riffle", "affine-a", "affine-c"),
                        required=True)
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--k", type=int, default=2)
    sample.add_argument("--seed", type=int, required=True)
    sample.add_argument("--count", type=int, default=1)

    uni = sub.add_parser("unimodal", help="unimodal permutations")
    uni.add_argument("--n", type=int, required=True)
    uni.add_argument("--histogram", action="store_true",
                     help="group by multiset of cycle shapes")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Output(args)
    if args.command == "measure":
        return _cmd_measure(args, out)
    if args.command == "verify":
        return _cmd_verify(args, out)
    if args.command == "sample":
        return _cmd_sample(args, out)
    if args.command == "unimodal":
        return _cmd_unimodal(args, out)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
