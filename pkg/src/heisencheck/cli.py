"""Command-line surface: verify / scan / hilbert / chars.

Exit codes: 0 success, 1 at least one failing check, 2 usage or config
error.  JSON reports are deterministic apart from the elapsed_ms sidecar
field and are written atomically.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import tempfile

from .checks import PASS, FAIL, WARN, CheckReport, RunConfig, SUITES, exit_code, run_suite
from .ffscan import census_csv, scan_strata
from .hilbert import abelian_surface_profile, graded_hilbert
from .surface9 import j_family

USAGE_ERROR = 2

_STATUS_ORDER = {FAIL: 0, WARN: 1, PASS: 2}


def render_report(reports: list[CheckReport], fmt: str) -> str:
    if fmt == "json":
        payload = [
            {
                "check_id": r.check_id,
                "status": r.status,
                "details": r.details,
                "elapsed_ms": r.elapsed_ms,
            }
            for r in sorted(reports, key=lambda r: r.check_id)
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    width = max((len(r.check_id) for r in reports), default=0)
    ordered = sorted(reports, key=lambda r: (_STATUS_ORDER[r.status], r.check_id))
    for r in ordered:
        lines.append(f"{r.check_id.ljust(width)}  {r.status.upper():<4}  {r.elapsed_ms:>7} ms")
    passed = sum(1 for r in reports if r.status == PASS)
    failed = sum(1 for r in reports if r.status == FAIL)
    warned = sum(1 for r in reports if r.status == WARN)
    lines.append(f"{passed} passed, {failed} failed, {warned} warnings")
    return "\n".join(lines) + "\n"


def write_atomic(path: str, content: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_config_file(path: str) -> dict:
    """Plain key=value lines; '#' starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _parse_samples(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        lam, _, mu = chunk.partition(":")
        pairs.append((int(lam), int(mu)))
    return tuple(pairs)


def build_config(args) -> RunConfig:
    config = RunConfig()
    if getattr(args, "config", None):
        raw = load_config_file(args.config)
        mapping = {
            "jacobian_primes": ("jacobian_primes", _parse_int_list),
            "scan_prime_d9": ("scan_prime_d9", int),
            "scan_prime_d11": ("scan_prime_d11", int),
            "t_max": ("t_max", int),
            "lambda_mu_samples": ("lambda_mu_samples", _parse_samples),
            "rank_primes": ("rank_primes", _parse_int_list),
            "report": ("report_path", str),
            "format": ("format", str),
        }
        updates = {}
        for key, value in raw.items():
            if key not in mapping:
                raise ValueError(f"unknown config key {key!r}")
            attr, parse = mapping[key]
            updates[attr] = parse(value)
        config = dataclasses.replace(config, **updates)
    if getattr(args, "report", None):
        config = dataclasses.replace(config, report_path=args.report)
    if getattr(args, "format", None):
        config = dataclasses.replace(config, format=args.format)
    config.validate()
    return config


def cmd_verify(args) -> int:
    try:
        config = build_config(args)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    reports = run_suite(args.suite, config)
    rendered = render_report(reports, config.format)
    if config.report_path:
        write_atomic(config.report_path, rendered)
        summary = render_report(reports, "text").strip().splitlines()[-1]
        print(f"wrote {config.report_path}: {summary}")
    else:
        sys.stdout.write(rendered)
    return exit_code(reports)


def cmd_scan(args) -> int:
    try:
        census = scan_strata(args.d, args.prime)
    except ValueError as exc:
        print(f"scan error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    csv_text = census_csv([census])
    if args.csv:
        write_atomic(args.csv, csv_text)
        print(f"wrote {args.csv}")
    sys.stdout.write(csv_text)
    print(f"minimal stratum: rank {census.min_rank} with {len(census.min_rank_points)} points")
    return 0


def cmd_hilbert(args) -> int:
    try:
        family = j_family(args.lam, args.mu)
    except ValueError as exc:
        print(f"hilbert error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    profile = graded_hilbert(family.generators(), 9, args.max_deg)
    target = abelian_surface_profile(args.max_deg)
    print(f"J({args.lam}:{args.mu}) Hilbert function, t = 0..{args.max_deg}")
    for t, (value, goal) in enumerate(zip(profile, target)):
        marker = "" if value == goal else "  (deviates from 9t^2)"
        print(f"  t={t}: {value}{marker}")
    return 0


def cmd_chars(args) -> int:
    from .chartab import character, decompose, multiplicity_names, sym_power_character

    for source in (3, 2):
        for k in (2, 3):
            mults = decompose(sym_power_character(character(source), k))
            print(f"sym^{k}(chi{source}) = {multiplicity_names(mults)}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="heisencheck",
        description="Exact verification suite for Heisenberg-invariant surface models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named check suite")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--report", help="write the report to this path")
    p_verify.add_argument("--format", choices=("json", "text"), default=None)
    p_verify.add_argument("--config", help="key=value config file")
    p_verify.set_defaults(fn=cmd_verify)

    p_scan = sub.add_parser("scan", help="rank-stratum census over a prime field")
    p_scan.add_argument("--d", type=int, required=True, choices=(9, 11))
    p_scan.add_argument("--prime", type=int, required=True)
    p_scan.add_argument("--csv", help="also write the census as CSV")
    p_scan.set_defaults(fn=cmd_scan)

    p_hilbert = sub.add_parser("hilbert", help="Hilbert function of one family member")
    p_hilbert.add_argument("--lambda", dest="lam", type=int, required=True)
    p_hilbert.add_argument("--mu", type=int, required=True)
    p_hilbert.add_argument("--max-deg", type=int, default=5)
    p_hilbert.set_defaults(fn=cmd_hilbert)

    p_chars = sub.add_parser("chars", help="symmetric-power character decompositions")
    p_chars.set_defaults(fn=cmd_chars)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
