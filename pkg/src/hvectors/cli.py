"""Command-line front end: classify vectors, emit family constructions,
run verifications and characteristic sweeps, write reports.

Exit codes: 0 success (or match), 1 verification mismatch, 2 invalid input.
JSON output is canonical (sorted keys, no floats) so that reruns with the
same seed are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import families, sequences
from .exact import MASK64, FieldSpec, is_prime
from .families import NoSuchFamily
from .inverse_systems import (
    VerificationReport,
    sweep_characteristics,
    verify_construction,
)
from .sequences import HVector, Violation
from .version import VERSION

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_FIELD = 32003
DEFAULT_SEED = 0
DEFAULT_TRIALS = 5
DEFAULT_SWEEP_CHARS = (0, 101, 1009, 32003)

PASS_MARK = "✓"
FAIL_MARK = "✗"

_VIOLATION_TEXT = {
    "growth": "growth from degree {i} to {j} exceeds the Macaulay bound",
    "asymmetry": "entry {i} differs from its mirror entry",
    "rise-after-fall": "strict increase at degree {i} after a strict decrease",
    "negative-difference": "first difference is negative at degree {i}",
    "internal-zero": "first difference has an internal zero at degree {i}",
    "difference-growth": "violation at difference step {i}->{j}",
}


class UsageError(Exception):
    """Invalid command line or out-of-range parameters."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: exactly one command plus its parameters."""

    command: str
    argv: tuple[str, ...]
    output_format: str = "plain"
    out_path: Optional[str] = None
    kind: Optional[str] = None
    vector: Optional[HVector] = None
    e_values: tuple[int, ...] = ()
    d_values: tuple[int, ...] = ()
    parities: tuple[str, ...] = ()
    lift: int = 0
    characteristic: int = DEFAULT_FIELD
    characteristics: tuple[int, ...] = ()
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="hvectors",
        description="h-vector calculus, Gorenstein family constructions, "
                    "and inverse-system verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, formats):
        p.add_argument("--format", choices=formats, default="plain")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write the report to a file instead of stdout")

    p_check = sub.add_parser(
        "check", help="classify a comma-separated h-vector")
    p_check.add_argument("vector", help="for example 1,10,14,20,14,10,1")
    add_output(p_check, ("plain", "json"))

    p_construct = sub.add_parser(
        "construct", help="emit a constructed family member")
    p_construct.add_argument("kind", choices=("thm-e", "thm-r"))
    p_construct.add_argument("--e", type=int, help="socle degree (thm-e)")
    p_construct.add_argument("--d", type=int, help="half degree (thm-r)")
    p_construct.add_argument("--parity", choices=("odd", "even"))
    p_construct.add_argument("--a", type=int, default=0,
                             help="lift every interior entry by this amount")
    add_output(p_construct, ("plain", "json", "csv"))

    p_verify = sub.add_parser(
        "verify", help="recompute a family's Hilbert function from random "
                       "inverse-system witnesses")
    p_verify.add_argument("kind", choices=("thm-e", "thm-r"))
    p_verify.add_argument("--e", help="socle degree or range, e.g. 6..10")
    p_verify.add_argument("--d", help="half degree or range, e.g. 10..12")
    p_verify.add_argument("--parity", choices=("odd", "even"),
                          help="thm-r only; both parities when omitted")
    p_verify.add_argument("--field", type=int, default=DEFAULT_FIELD,
                          help="0 for the rationals or a prime")
    p_verify.add_argument("--seed", default=str(DEFAULT_SEED))
    p_verify.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    add_output(p_verify, ("plain", "json", "csv"))

    p_sweep = sub.add_parser(
        "sweep", help="verify one construction across characteristics")
    p_sweep.add_argument("kind", choices=("thm-e", "thm-r"))
    p_sweep.add_argument("--e", type=int)
    p_sweep.add_argument("--d", type=int)
    p_sweep.add_argument("--parity", choices=("odd", "even"))
    p_sweep.add_argument("--chars",
                         default=",".join(str(c) for c in DEFAULT_SWEEP_CHARS),
                         help="comma-separated characteristics (0 or primes)")
    p_sweep.add_argument("--seed", default=str(DEFAULT_SEED))
    p_sweep.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    add_output(p_sweep, ("plain", "json", "csv"))
    return parser


def _parse_vector(text: str) -> HVector:
    cleaned = text.strip().strip("()[]")
    parts = [p.strip() for p in cleaned.split(",") if p.strip()]
    try:
        entries = [int(p) for p in parts]
        return HVector(tuple(entries))
    except ValueError as err:
        raise UsageError(f"malformed h-vector literal {text!r}: {err}") from None


def _parse_values(text: Optional[str], flag: str) -> tuple[int, ...]:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise UsageError(f"empty range {text!r} for {flag}")
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise UsageError(f"cannot parse {flag} value {text!r}") from None


def _parse_seed(text: str) -> int:
    try:
        seed = int(text, 0)
    except ValueError:
        raise UsageError(f"cannot parse seed {text!r}") from None
    if seed < 0:
        raise UsageError("seed must be nonnegative")
    return seed & MASK64


def _validate_field(value: int) -> int:
    if value != 0 and not is_prime(value):
        raise UsageError(f"field characteristic must be 0 or a prime, got {value}")
    return value


def _build_config(args: argparse.Namespace, argv: Sequence[str]) -> RunConfig:
    common = dict(
        command=args.command,
        argv=tuple(argv),
        output_format=args.format,
        out_path=args.out,
    )
    if args.command == "check":
        return RunConfig(vector=_parse_vector(args.vector), **common)

    kind = args.kind
    if kind == "thm-e" and (args.d is not None or args.parity is not None):
        raise UsageError("thm-e takes --e only")
    if kind == "thm-r" and args.e is not None:
        raise UsageError("thm-r takes --d, not --e")

    if args.command == "construct":
        if kind == "thm-e":
            if args.e is None:
                raise UsageError("--e is required")
            e_values: tuple[int, ...] = (args.e,)
            d_values: tuple[int, ...] = ()
            parities: tuple[str, ...] = ()
        else:
            if args.d is None or args.parity is None:
                raise UsageError("thm-r needs --d and --parity")
            if args.d < families.MIN_HALF_DEGREE:
                raise UsageError(
                    f"--d must be >= {families.MIN_HALF_DEGREE}, got {args.d}"
                )
            e_values = ()
            d_values = (args.d,)
            parities = (args.parity,)
        if args.a < 0:
            raise UsageError("--a must be nonnegative")
        return RunConfig(kind=kind, e_values=e_values, d_values=d_values,
                         parities=parities, lift=args.a, **common)

    if args.command == "verify":
        seed = _parse_seed(args.seed)
        if args.trials < 1:
            raise UsageError("--trials must be at least 1")
        characteristic = _validate_field(args.field)
        if kind == "thm-e":
            e_values = _parse_values(args.e, "--e")
            if min(e_values) < families.MIN_SOCLE_DEGREE:
                raise UsageError(
                    f"--e must be >= {families.MIN_SOCLE_DEGREE} "
                    "(no construction exists below that)"
                )
            d_values = ()
            parities = ()
        else:
            d_values = _parse_values(args.d, "--d")
            if min(d_values) < families.MIN_HALF_DEGREE:
                raise UsageError(
                    f"--d must be >= {families.MIN_HALF_DEGREE}, got {min(d_values)}"
                )
            e_values = ()
            parities = (args.parity,) if args.parity else ("odd", "even")
        return RunConfig(kind=kind, e_values=e_values, d_values=d_values,
                         parities=parities, characteristic=characteristic,
                         seed=seed, trials=args.trials, **common)

    # sweep
    seed = _parse_seed(args.seed)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    try:
        chars = tuple(int(c) for c in args.chars.split(",") if c.strip())
    except ValueError:
        raise UsageError(f"cannot parse --chars {args.chars!r}") from None
    if not chars:
        raise UsageError("--chars must list at least one characteristic")
    for c in chars:
        _validate_field(c)
    if kind == "thm-e":
        if args.e is None:
            raise UsageError("--e is required")
        if args.e < families.MIN_SOCLE_DEGREE:
            raise UsageError(f"--e must be >= {families.MIN_SOCLE_DEGREE}")
        e_values = (args.e,)
        d_values = ()
        parities = ()
    else:
        if args.d is None:
            raise UsageError("--d is required")
        if args.d < families.MIN_HALF_DEGREE:
            raise UsageError(f"--d must be >= {families.MIN_HALF_DEGREE}")
        e_values = ()
        d_values = (args.d,)
        parities = (args.parity,) if args.parity else ("odd", "even")
    return RunConfig(kind=kind, e_values=e_values, d_values=d_values,
                     parities=parities, characteristics=chars, seed=seed,
                     trials=args.trials, **common)


def _violation_text(violation: Violation) -> str:
    return _VIOLATION_TEXT[violation.kind].format(
        i=violation.index, j=violation.index + 1
    )


def _field_text(characteristic: int) -> str:
    return "QQ" if characteristic == 0 else f"GF({characteristic})"


def _command_text(config: RunConfig) -> str:
    return " ".join(["hvectors", *config.argv])


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _csv_text(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(text: str, config: RunConfig) -> None:
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check(config: RunConfig) -> int:
    h = config.vector
    assert h is not None
    results = (
        ("O-sequence", "o_sequence", sequences.o_sequence_violation(h)),
        ("symmetric", "symmetric", sequences.symmetry_violation(h)),
        ("unimodal", "unimodal", sequences.unimodality_violation(h)),
        ("differentiable", "differentiable",
         sequences.differentiability_violation(h)),
        ("SI-sequence", "si_sequence", sequences.si_violation(h)),
    )
    if config.output_format == "json":
        payload = {
            "command": _command_text(config),
            "version": VERSION,
            "vector": list(h.entries),
            "socle_degree": h.socle_degree,
            "codimension": h.codimension if len(h) > 1 else None,
            "violations": {
                key: {"kind": v.kind, "index": v.index}
                for _, key, v in results if v is not None
            },
        }
        for _, key, violation in results:
            payload[key] = violation is None
        _emit(_json_text(payload), config)
        return EXIT_OK
    lines = [
        f"h-vector       {h}",
        f"socle degree   {h.socle_degree}",
        f"codimension    {h.codimension if len(h) > 1 else '-'}",
    ]
    for name, _, violation in results:
        if violation is None:
            lines.append(f"{name:<15}{PASS_MARK}")
        else:
            lines.append(f"{name:<15}{FAIL_MARK} ({_violation_text(violation)})")
    _emit("\n".join(lines) + "\n", config)
    return EXIT_OK


def _cmd_construct(config: RunConfig) -> int:
    if config.kind == "thm-e":
        outcome = families.socle_degree_family(config.e_values[0])
        if isinstance(outcome, NoSuchFamily):
            raise UsageError(outcome.reason)
    else:
        outcome = families.codim5_family(config.d_values[0], config.parities[0])
    gorenstein = outcome.gorenstein
    level: Optional[HVector] = outcome.level
    if config.lift > 0:
        gorenstein = families.lift_codimension(gorenstein, config.lift)
        level = None  # the lifted vector has no level companion
    if config.output_format == "json":
        payload = {
            "command": _command_text(config),
            "version": VERSION,
            "kind": outcome.kind,
            "parameter": outcome.parameter,
            "lift": config.lift,
            "level": list(level.entries) if level is not None else None,
            "gorenstein": list(gorenstein.entries),
            "codimension": gorenstein.codimension,
            "socle_degree": gorenstein.socle_degree,
            "violation_step": list(outcome.violation_step),
        }
        _emit(_json_text(payload), config)
        return EXIT_OK
    if config.output_format == "csv":
        rows = []
        if level is not None:
            rows.append([outcome.kind, outcome.parameter, "level",
                         *level.entries])
        rows.append([outcome.kind, outcome.parameter, "gorenstein",
                     *gorenstein.entries])
        _emit(_csv_text(rows), config)
        return EXIT_OK
    lines = [
        f"kind           {outcome.kind}",
        f"parameter      {outcome.parameter}",
    ]
    if config.lift:
        lines.append(f"lift           {config.lift}")
    if level is not None:
        lines.append(f"level          {level}")
    lines += [
        f"gorenstein     {gorenstein}",
        f"codimension    {gorenstein.codimension}",
        f"socle degree   {gorenstein.socle_degree}",
        "predicted SI violation: difference step "
        f"{outcome.violation_step[0]}->{outcome.violation_step[1]}",
    ]
    _emit("\n".join(lines) + "\n", config)
    return EXIT_OK


def _verification_jobs(config: RunConfig) -> list[tuple[str, int]]:
    if config.kind == "thm-e":
        return [(families.KIND_SOCLE_DEGREE, e) for e in config.e_values]
    kinds = {
        "odd": families.KIND_CODIM5_ODD,
        "even": families.KIND_CODIM5_EVEN,
    }
    return [
        (kinds[parity], d)
        for d in config.d_values
        for parity in config.parities
    ]


def _report_plain(report: VerificationReport) -> list[str]:
    lines = [
        f"{report.kind} parameter={report.parameter} "
        f"field={_field_text(report.characteristic)} seed={report.seed} "
        f"trials={report.trials} generator={report.generator}",
        f"  target  {','.join(str(v) for v in report.target)}",
    ]
    for k, (trial_seed, vec) in enumerate(
            zip(report.trial_seeds, report.per_trial)):
        lines.append(
            f"  trial {k} {','.join(str(v) for v in vec)} (seed {trial_seed})"
        )
    if report.best:
        lines.append(f"  best    {','.join(str(v) for v in report.best)}")
    lines.append(f"  verdict {report.verdict}")
    if report.detail:
        lines.append(f"  detail  {report.detail}")
    if report.degree_seconds:
        lines.append("  seconds per degree: "
                     + " ".join(f"{s:.3f}" for s in report.degree_seconds))
    return lines


def _report_csv_rows(report: VerificationReport) -> list[list]:
    rows = [[report.kind, report.parameter, "target", *report.target]]
    for k, vec in enumerate(report.per_trial):
        rows.append([report.kind, report.parameter, f"trial{k}", *vec])
    if report.best:
        rows.append([report.kind, report.parameter, "best", *report.best])
    return rows


def _emit_reports(reports: list[VerificationReport], config: RunConfig) -> int:
    if config.output_format == "json":
        command = _command_text(config)
        payload = {
            "command": command,
            "version": VERSION,
            "reports": [r.to_json_dict(command) for r in reports],
        }
        _emit(_json_text(payload), config)
    elif config.output_format == "csv":
        rows = []
        for report in reports:
            rows.extend(_report_csv_rows(report))
        _emit(_csv_text(rows), config)
    else:
        lines = []
        for report in reports:
            lines.extend(_report_plain(report))
        _emit("\n".join(lines) + "\n", config)
    failed = any(
        r.verdict == "mismatch" or r.status == "error" for r in reports
    )
    return EXIT_MISMATCH if failed else EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    field = FieldSpec(config.characteristic)
    reports = [
        verify_construction(kind, parameter, field, config.seed, config.trials)
        for kind, parameter in _verification_jobs(config)
    ]
    return _emit_reports(reports, config)


def _cmd_sweep(config: RunConfig) -> int:
    reports = []
    for kind, parameter in _verification_jobs(config):
        reports.extend(
            sweep_characteristics(kind, parameter, config.characteristics,
                                  config.seed, config.trials)
        )
    return _emit_reports(reports, config)


def run(config: RunConfig) -> int:
    handlers = {
        "check": _cmd_check,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
    }
    return handlers[config.command](config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    arguments = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = _build_parser().parse_args(arguments)
        config = _build_config(args, arguments)
        return run(config)
    except UsageError as err:
        print(f"hvectors: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as err:
        print(f"hvectors: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
