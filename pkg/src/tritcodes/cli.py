"""Command-line entry point.

Commands: construct | verify-distance | dual-spectrum | lemma-check | report.
All output is UTF-8 JSON, newline-terminated, with fixed key order and
counts maps keyed by decimal strings sorted numerically, so byte-level
diffing works.  Exit codes: 0 = all checks pass, 1 = mathematical
mismatch, 2 = invalid input.

The report command diffs against the shipped fixtures for m in {5, 7, 9};
TRITCODES_FIXTURES overrides the fixture directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import codebuilder, distance, dualspectrum, lemma, polyring
from .exceptions import (
    Inconsistent,
    NonIntegerOutput,
    NonIntegralWeight,
    TritcodesError,
)
from .gf3m import make_field

FIXTURE_MS = (5, 7, 9)


def _load_fixture(m: int) -> dict | None:
    override = os.environ.get("TRITCODES_FIXTURES")
    if override:
        path = Path(override) / f"m{m}.json"
        if not path.is_file():
            return None
        return json.loads(path.read_text(encoding="utf-8"))
    ref = resources.files("tritcodes") / "fixtures" / f"m{m}.json"
    if not ref.is_file():
        return None
    return json.loads(ref.read_text(encoding="utf-8"))


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _field(args):
    modulus = polyring.parse_poly(args.modulus) if args.modulus else None
    return make_field(args.m, modulus)


def cmd_construct(args) -> int:
    ctx = _field(args)
    code = codebuilder.build_code(ctx)
    _emit(code.to_json_dict(), args.out)
    return 0


def cmd_verify_distance(args) -> int:
    ctx = _field(args)
    code = codebuilder.build_code(ctx)
    report = distance.conclude_distance(code, budget=args.budget)
    _emit(report.to_json_dict(), args.out)
    return 0 if report.concluded_d == 4 else 1


def _enumerators(ctx, method: str, workers: int, budget: int):
    spectral = direct = None
    if method in ("spectral", "both"):
        spectral = dualspectrum.spectral_enumerator(ctx, workers=workers, budget=budget)
    if method in ("direct", "both"):
        direct = dualspectrum.direct_enumerator(ctx, budget=budget)
    return spectral, direct


def cmd_dual_spectrum(args) -> int:
    ctx = _field(args)
    spectral, direct = _enumerators(ctx, args.method, args.workers, args.budget)
    if args.method == "spectral":
        doc = spectral.to_json_dict()
    elif args.method == "direct":
        doc = direct.to_json_dict()
    else:
        doc = {
            "spectral": spectral.to_json_dict(),
            "direct": direct.to_json_dict(),
            "agree": spectral == direct,
        }
        if not doc["agree"]:
            _emit(doc, args.out)
            return 1
    _emit(doc, args.out)
    return 0


def cmd_lemma_check(args) -> int:
    ctx = _field(args)
    docs = [lemma.lemma_check(ctx, eps).to_json_dict() for eps in (1, 2)]
    _emit({"m": ctx.m, "reports": docs}, args.out)
    return 0 if all(d["solution_count"] == 0 for d in docs) else 1


def cmd_report(args) -> int:
    ctx = _field(args)
    code = codebuilder.build_code(ctx)
    spectral, direct = _enumerators(ctx, args.method, args.workers, args.budget)
    enum = spectral if spectral is not None else direct
    dist_report = distance.conclude_distance(code, dual_enum=enum, budget=args.budget)
    lemma_docs = [lemma.lemma_check(ctx, eps).to_json_dict() for eps in (1, 2)]

    predicted = dualspectrum.weight_value_set(ctx.m)
    checks = {
        "d_equals_4": dist_report.concluded_d == 4,
        "lemma_empty": all(d["solution_count"] == 0 for d in lemma_docs),
        "weights_in_predicted_set": enum.support() <= predicted,
        "paths_agree": spectral == direct if args.method == "both" else None,
        "fixture_match": None,
    }
    fixture = _load_fixture(ctx.m) if ctx.m in FIXTURE_MS else None
    if fixture is not None and fixture["modulus"] == polyring.format_poly(ctx.modulus):
        fix_counts = {int(w): c for w, c in fixture["dual_weight_enumerator"]["counts"].items()}
        checks["fixture_match"] = (
            fixture["generator"] == polyring.format_poly(code.gen)
            and fixture["n"] == code.n
            and fixture["k"] == code.k
            and fix_counts == {w: c for w, c in enum.counts.items() if c}
        )
    mismatch = next(
        (name for name, ok in checks.items() if ok is False),
        None,
    )
    doc = {
        **code.to_json_dict(),
        "distance": dist_report.to_json_dict(),
        "lemma": lemma_docs,
        "dual_spectrum": {
            "method": args.method,
            "spectral": spectral.to_json_dict() if spectral else None,
            "direct": direct.to_json_dict() if direct else None,
        },
        "checks": checks,
        "mismatch": mismatch,
    }
    _emit(doc, args.out)
    return 0 if mismatch is None else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritcodes",
        description="Optimal ternary cyclic codes C_(u,v) and their dual spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "construct": cmd_construct,
        "verify-distance": cmd_verify_distance,
        "dual-spectrum": cmd_dual_spectrum,
        "lemma-check": cmd_lemma_check,
        "report": cmd_report,
    }
    for name, func in specs.items():
        p = sub.add_parser(name)
        p.add_argument("--m", type=int, required=True, help="extension degree (odd, 3..13)")
        p.add_argument("--modulus", help="ascending trit list, e.g. 1,2,0,0,0,1")
        p.add_argument("--out", help="write JSON here instead of stdout")
        p.add_argument(
            "--workers", type=int, default=os.cpu_count() or 1,
            help="parallel partitions; results are workers-independent",
        )
        p.add_argument(
            "--budget", type=int, default=distance.DEFAULT_BUDGET,
            help="operation-count ceiling gating expensive paths",
        )
        if name in ("dual-spectrum", "report"):
            p.add_argument(
                "--method", choices=("spectral", "direct", "both"), default="spectral"
            )
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Inconsistent, NonIntegerOutput, NonIntegralWeight) as exc:
        # internal mathematical inconsistency, not bad input
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except TritcodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
