"""Command-line front end emitting deterministic JSON artifacts.

Subcommands: family-scan, covering-report, degree-plan, modular-verify,
fermat-search.  Flags may also be supplied through a flat JSON config file
(--config); explicit command-line values win.  Exit codes: 0 success,
2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import coverings, newton, qseries
from .errors import NtcertError
from .exact import BiPoly, parse_rational
from .family import derive_family, scan_family
from .jsonio import SCHEMA_VERSION, dumps_canonical

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILURE = 3

_SCAN_DEFAULTS = {
    "a1": "1",
    "a4": "1",
    "s_height_max": 10,
    "witness_bound": 1000,
    "torsion_primes": "2",
    "jobs": 1,
}


@dataclass(frozen=True)
class ScanConfig:
    """Merged family-scan settings (defaults < config file < CLI flags)."""

    a1: Fraction
    a4: Fraction
    s_height_max: int
    witness_bound: int
    torsion_primes: int | tuple[int, ...]
    output_path: str | None

    def to_json_dict(self) -> dict:
        torsion = self.torsion_primes
        return {
            "a1": self.a1,
            "a4": self.a4,
            "s_height_max": self.s_height_max,
            "witness_bound": self.witness_bound,
            "torsion_primes": list(torsion) if isinstance(torsion, tuple) else torsion,
        }


def _emit(doc: dict, out_path: str | None) -> None:
    text = dumps_canonical(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise NtcertError("config file must hold a flat JSON object")
    return cfg


def _merged(args: argparse.Namespace, key: str, defaults: dict):
    value = getattr(args, key.replace("-", "_"), None)
    if value is not None:
        return value
    cfg = getattr(args, "_config", {})
    if key in cfg:
        return cfg[key]
    return defaults[key]


def _parse_torsion_primes(raw) -> int | tuple[int, ...]:
    """Plain integer = how many good primes to pick; comma list = explicit primes."""
    if isinstance(raw, int):
        return raw
    if isinstance(raw, (list, tuple)):
        return tuple(int(v) for v in raw)
    text = str(raw).strip()
    if "," in text:
        return tuple(int(part) for part in text.split(",") if part.strip())
    return int(text)


def cmd_family_scan(args: argparse.Namespace) -> int:
    config = ScanConfig(
        a1=parse_rational(str(_merged(args, "a1", _SCAN_DEFAULTS))),
        a4=parse_rational(str(_merged(args, "a4", _SCAN_DEFAULTS))),
        s_height_max=int(_merged(args, "s_height_max", _SCAN_DEFAULTS)),
        witness_bound=int(_merged(args, "witness_bound", _SCAN_DEFAULTS)),
        torsion_primes=_parse_torsion_primes(
            _merged(args, "torsion_primes", _SCAN_DEFAULTS)
        ),
        output_path=args.out,
    )
    jobs = int(_merged(args, "jobs", _SCAN_DEFAULTS))

    params = derive_family(config.a1, config.a4)
    result = scan_family(
        params,
        s_height_max=config.s_height_max,
        witness_bound=config.witness_bound,
        torsion_primes=config.torsion_primes,
        jobs=jobs,
    )
    # jobs is an execution detail, not part of the scan's identity
    doc = {
        "schema": SCHEMA_VERSION,
        "config": config.to_json_dict(),
        "summary": result.summary(),
        "certificates": [cert.to_json_dict() for cert in result.certificates],
    }
    _emit(doc, config.output_path)
    return EXIT_OK


def cmd_covering_report(args: argparse.Namespace) -> int:
    report = coverings.covering_report(args.p)
    doc = {"schema": SCHEMA_VERSION, **report}
    _emit(doc, args.out)
    return EXIT_OK


def cmd_degree_plan(args: argparse.Namespace) -> int:
    n, d_max = args.n, args.d_max
    achievable = newton.plan_degrees(n, d_max)
    big_n = newton.min_universal_degree(n)

    # demo polynomial with the corner shape: v1^(n-1) v2 + v2^n + v1 + 1
    demo = BiPoly({(n - 1, 1): 1, (0, n): 1, (1, 0): 1, (0, 0): 1})
    corner = newton.corner_check(demo, n)
    b = newton.default_b_sequence(1)[0]
    _, deg_t = newton.substitute_st(demo, 2, 1, b)
    degree_law = deg_t == 2 * (n - 1) + 1

    doc = {
        "schema": SCHEMA_VERSION,
        "n": n,
        "d_max": d_max,
        "N": big_n,
        "achievable": sorted(achievable),
        "checks": {"corner": corner, "degree_law": degree_law},
        "b": b,
    }
    _emit(doc, args.out)
    return EXIT_OK if corner and degree_law else EXIT_VERIFICATION_FAILURE


def cmd_modular_verify(args: argparse.Namespace) -> int:
    report = qseries.verify_eta_identity(args.order)
    doc = {"schema": SCHEMA_VERSION, **report}
    _emit(doc, args.out)
    passed = (
        report["printed_coefficients_match"]
        and report["j_identity_match"]
        and report["closed_form_match"]
    )
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILURE


def cmd_fermat_search(args: argparse.Namespace) -> int:
    solutions = coverings.fermat_search(args.p, args.bound)
    nontrivial = coverings.nontrivial_solutions(solutions)
    doc = {
        "schema": SCHEMA_VERSION,
        "p": args.p,
        "bound": args.bound,
        "solutions_found": len(solutions),
        "trivial_count": len(solutions) - len(nontrivial),
        "nontrivial": [list(s) for s in nontrivial],
    }
    if args.full:
        doc["solutions"] = [list(s) for s in solutions]
    _emit(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ntcert",
        description="Exact certificates: cubic-field fibers, coverings, degree plans, q-series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("family-scan", help="scan fibers and emit extension certificates")
    scan.add_argument("--a1", help="family coefficient a1 (rational, nonzero)")
    scan.add_argument("--a4", help="family coefficient a4 (rational, nonzero)")
    scan.add_argument("--s-height-max", type=int, dest="s_height_max", help="max height of s")
    scan.add_argument("--witness-bound", type=int, dest="witness_bound", help="prime bound for distinctness witnesses")
    scan.add_argument(
        "--torsion-primes",
        dest="torsion_primes",
        help="integer = number of good primes to select; comma list = explicit primes",
    )
    scan.add_argument("--jobs", type=int, help="worker processes for fiber evaluation")
    scan.add_argument("--config", help="flat JSON config file; CLI flags override it")
    scan.add_argument("--out", help="output path (stdout if omitted)")
    scan.set_defaults(func=cmd_family_scan)

    cov = sub.add_parser("covering-report", help="congruence solutions, models, genus data")
    cov.add_argument("p", type=int)
    cov.add_argument("--out", help="output path (stdout if omitted)")
    cov.set_defaults(func=cmd_covering_report)

    plan = sub.add_parser("degree-plan", help="reachable degrees for the substitution planner")
    plan.add_argument("n", type=int)
    plan.add_argument("d_max", type=int)
    plan.add_argument("--out", help="output path (stdout if omitted)")
    plan.set_defaults(func=cmd_degree_plan)

    mod = sub.add_parser("modular-verify", help="verify the eta-quotient / j identity")
    mod.add_argument("--order", type=int, default=24)
    mod.add_argument("--out", help="output path (stdout if omitted)")
    mod.set_defaults(func=cmd_modular_verify)

    fer = sub.add_parser("fermat-search", help="brute-force search of A^p = B^p + C^p")
    fer.add_argument("p", type=int, choices=(3, 5, 7))
    fer.add_argument("--bound", type=int, default=100)
    fer.add_argument("--full", action="store_true", help="list every solution, not just counts")
    fer.add_argument("--out", help="output path (stdout if omitted)")
    fer.set_defaults(func=cmd_fermat_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args._config = _load_config(getattr(args, "config", None))
    except (OSError, json.JSONDecodeError, NtcertError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    try:
        return args.func(args)
    except NtcertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()
