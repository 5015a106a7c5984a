"""Command-line front end.

Subcommands: decide, expand, tropical, verify, oracle.  Input is a
support as JSON ({"n": ..., "exponents": [[...], ...]}) from --input or
stdin; field and seed come from flags.  JSON is the wire format; text
output renders the same data and nothing more.  For a fixed input and
seed every command prints byte-identical output across runs.

Exit codes: 0 success, 1 falsified invariant or certificate mismatch
(also inconclusive randomized checks), 2 malformed input or cap
violation.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from gvand.errors import (
    CertificateMismatchError,
    GvandError,
    InputError,
    InvariantViolationError,
)
from gvand.exponents import Support, affine_dimension, componentwise_min, d_gamma
from gvand.irreducibility import (
    VERDICT_IRREDUCIBLE,
    FieldSpec,
    decide,
    verify_certificate,
)
from gvand.oracle import (
    LEIBNIZ_MAX_N,
    LINE_CASE_PRIMES,
    POLYGON_INDECOMPOSABLE,
    classical_divisibility_check,
    jacobian_independence_evidence,
    leibniz_determinant,
    line_case_factor,
    polygon_indecomposability,
)
from gvand.rings import CoefficientRing
from gvand.tropical import TROPICAL_IRREDUCIBLE, decide_tropical_irreducibility
from gvand.vandermonde import (
    DEFAULT_MAX_N,
    VandermondeInstance,
    build_matrix,
    row_expansion,
    vandermonde_determinant,
)

MAX_SEED = 2**64 - 1
ORACLE_CHECKS = ("leibniz", "classical", "line", "jacobian", "polygon")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str  # file path, or "-" for stdin
    characteristic: int = 0
    seed: int = 0
    fmt: str = "json"
    max_n: int = DEFAULT_MAX_N
    max_vars: int = 8
    check: str = ""
    trials: int = 3


def _load_support(config: RunConfig) -> Support:
    if config.input_path and config.input_path != "-":
        try:
            with open(config.input_path, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InputError(f"input: cannot read {config.input_path}: {exc.strerror}")
    else:
        raw = sys.stdin.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"input: invalid JSON: {exc}")
    support = Support.from_json(data)
    if support.N > config.max_n:
        raise InputError(f"support.exponents: N = {support.N} exceeds the cap {config.max_n}")
    if support.n > config.max_vars:
        raise InputError(f"support.n: n = {support.n} exceeds the cap {config.max_vars}")
    return support


def _render_text(data, indent: int = 0):
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for key, val in data.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(data, list):
        for val in data:
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}-")
                lines.extend(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(val)}")
    else:
        lines.append(f"{pad}{_scalar(data)}")
    return lines


def _scalar(val) -> str:
    if val is None:
        return "null"
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, (dict, list)):
        return "{}" if isinstance(val, dict) else "[]"
    return str(val)


def _emit(config: RunConfig, payload: dict):
    if config.fmt == "text":
        sys.stdout.write("\n".join(_render_text(payload)) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, separators=(", ", ": ")) + "\n")


def _cmd_decide(config: RunConfig) -> int:
    support = _load_support(config)
    cert = decide(support, FieldSpec(config.characteristic))
    _emit(
        config,
        {
            "command": "decide",
            "seed": config.seed,
            "characteristic": config.characteristic,
            "support": support.to_json(),
            "certificate": cert.to_json(),
        },
    )
    return 0


def _cmd_expand(config: RunConfig) -> int:
    support = _load_support(config)
    inst = VandermondeInstance(support, CoefficientRing(config.characteristic))
    det = vandermonde_determinant(inst, max_n=config.max_n)
    expansion = row_expansion(inst, max_n=config.max_n)
    _emit(
        config,
        {
            "command": "expand",
            "seed": config.seed,
            "characteristic": config.characteristic,
            "support": support.to_json(),
            "variables": list(inst.poly_ring().variables),
            "determinant": det.to_terms_json(),
            "signs": list(expansion.signs),
            "minors": [m.to_terms_json() for m in expansion.minors],
        },
    )
    return 0


def _cmd_tropical(config: RunConfig) -> int:
    support = _load_support(config)
    cert = decide_tropical_irreducibility(support, seed=config.seed)
    _emit(
        config,
        {
            "command": "tropical",
            "seed": config.seed,
            "support": support.to_json(),
            "certificate": cert.to_json(),
        },
    )
    return 0


def _cmd_verify(config: RunConfig) -> int:
    support = _load_support(config)
    field = FieldSpec(config.characteristic)
    cert = decide(support, field)
    inst = VandermondeInstance(support, field.ring)
    payload = {
        "command": "verify",
        "seed": config.seed,
        "characteristic": config.characteristic,
        "support": support.to_json(),
        "certificate": cert.to_json(),
    }
    failed = False
    try:
        payload["verification"] = verify_certificate(inst, cert, seed=config.seed)
    except CertificateMismatchError as exc:
        payload["verification"] = exc.report or {"ok": False, "error": str(exc)}
        failed = True

    oracles = {}
    tropical_cert = decide_tropical_irreducibility(support, seed=config.seed)
    d = d_gamma(support) if support.N >= 2 else None
    if support.N >= 3:
        char0 = decide(support, FieldSpec(0))
        expected = char0.verdict == VERDICT_IRREDUCIBLE and d == 1
        agree = (tropical_cert.verdict == TROPICAL_IRREDUCIBLE) == expected
    else:
        agree = tropical_cert.verdict != TROPICAL_IRREDUCIBLE
    oracles["tropical_agreement"] = {
        "ok": agree,
        "tropical_verdict": tropical_cert.verdict,
        "multiplicity_gcd": tropical_cert.multiplicity_gcd,
    }
    failed = failed or not agree

    if support.n == 1:
        report = classical_divisibility_check(support)
        ok = report["divides"] and report["remultiplies"]
        oracles["classical_divisibility"] = {
            "ok": ok,
            "quotient_terms": report["quotient_terms"],
        }
        failed = failed or not ok

    if support.n == 2 and affine_dimension(support) == 2:
        poly_report = polygon_indecomposability(support)
        consistent = True
        if poly_report.status == POLYGON_INDECOMPOSABLE and not any(componentwise_min(support)):
            char0 = decide(support, FieldSpec(0))
            consistent = char0.verdict == VERDICT_IRREDUCIBLE
        oracles["polygon"] = {"ok": consistent, "status": poly_report.status}
        failed = failed or not consistent

    if 2 <= support.N <= 6:
        jreport = jacobian_independence_evidence(support, trials=config.trials, seed=config.seed)
        oracles["jacobian_evidence"] = {
            "ok": True,
            "conclusive": jreport.conclusive,
            "achieved_rank": jreport.achieved_rank,
            "target_rank": jreport.target_rank,
        }

    payload["oracles"] = oracles
    payload["ok"] = not failed
    _emit(config, payload)
    return 1 if failed else 0


def _cmd_oracle(config: RunConfig) -> int:
    support = _load_support(config)
    payload = {
        "command": "oracle",
        "check": config.check,
        "seed": config.seed,
        "characteristic": config.characteristic,
        "support": support.to_json(),
    }
    failed = False
    if config.check == "leibniz":
        if support.N > LEIBNIZ_MAX_N:
            raise InputError(f"support.exponents: N = {support.N} exceeds the Leibniz cap {LEIBNIZ_MAX_N}")
        inst = VandermondeInstance(support, CoefficientRing(config.characteristic))
        matrix = build_matrix(inst)
        agree = leibniz_determinant(matrix) == vandermonde_determinant(inst)
        payload["report"] = {"ok": agree}
        failed = not agree
    elif config.check == "classical":
        report = classical_divisibility_check(support)
        ok = report["divides"] and report["remultiplies"]
        payload["report"] = {
            "ok": ok,
            "quotient_terms": report["quotient_terms"],
            "quotient": report["quotient"].to_terms_json() if report["quotient"] is not None else None,
        }
        failed = not ok
    elif config.check == "line":
        if config.characteristic not in LINE_CASE_PRIMES:
            raise InputError(f"char: line check needs a characteristic in {list(LINE_CASE_PRIMES)}")
        inst = VandermondeInstance(support, CoefficientRing(config.characteristic))
        report = line_case_factor(inst, seed=config.seed)
        payload["report"] = dict(report.to_json(), ok=report.n_factors >= 2)
        failed = report.n_factors < 2
    elif config.check == "jacobian":
        report = jacobian_independence_evidence(support, trials=config.trials, seed=config.seed)
        payload["report"] = dict(report.to_json(), ok=True)
    elif config.check == "polygon":
        report = polygon_indecomposability(support)
        payload["report"] = dict(report.to_json(), ok=True)
    else:
        raise InputError(f"check: unknown oracle check {config.check!r}")
    _emit(config, payload)
    return 1 if failed else 0


_COMMANDS = {
    "decide": _cmd_decide,
    "expand": _cmd_expand,
    "tropical": _cmd_tropical,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
}


def run(config: RunConfig) -> int:
    """Dispatch one command; returns the process exit code."""
    try:
        return _COMMANDS[config.command](config)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (CertificateMismatchError, InvariantViolationError) as exc:
        sys.stderr.write(f"falsified: {exc}\n")
        return 1
    except GvandError as exc:
        # caps and unlucky randomized runs: declined, not falsified
        name = type(exc).__name__
        if name in ("SizeCapError", "DegenerateSupportError"):
            sys.stderr.write(f"error: {exc}\n")
            return 2
        sys.stderr.write(f"inconclusive: {exc}\n")
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvand",
        description="Exact generalized Vandermonde determinants: decisions, expansions, tropical cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, blurb in (
        ("decide", "classify the determinant's irreducibility over a field"),
        ("expand", "expand the determinant and its first-row minors"),
        ("tropical", "characteristic-blind tropical decision with witness"),
        ("verify", "decide, re-check the certificate, and run consistency oracles"),
        ("oracle", "run one independent check by name"),
    ):
        cmd = sub.add_parser(name, help=blurb)
        cmd.add_argument("--input", default="-", help="support JSON file, or - for stdin")
        cmd.add_argument("--char", type=int, default=0, metavar="P", help="field characteristic (0 or a prime)")
        cmd.add_argument("--seed", type=int, default=0, help="seed for all randomized steps (echoed in output)")
        cmd.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
        cmd.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="cap on N (at most 12)")
        cmd.add_argument("--max-vars", type=int, default=8, help="cap on the ambient dimension n")
        if name == "oracle":
            cmd.add_argument("--check", required=True, choices=ORACLE_CHECKS)
            cmd.add_argument("--trials", type=int, default=3, help="sample points for the jacobian check")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if not 0 <= args.seed <= MAX_SEED:
            raise InputError("seed: must fit in an unsigned 64-bit integer")
        if args.max_n > DEFAULT_MAX_N or args.max_n < 1:
            raise InputError(f"max-n: must be between 1 and {DEFAULT_MAX_N}")
        if args.max_vars < 1:
            raise InputError("max-vars: must be positive")
        try:
            CoefficientRing(args.char)
        except ValueError as exc:
            raise InputError(f"char: {exc}")
        config = RunConfig(
            command=args.command,
            input_path=args.input,
            characteristic=args.char,
            seed=args.seed,
            fmt=args.fmt,
            max_n=args.max_n,
            max_vars=args.max_vars,
            check=getattr(args, "check", ""),
            trials=getattr(args, "trials", 3),
        )
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
