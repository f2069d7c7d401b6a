"""Command line surface: file I/O, dispatch, and JSON reporting.

Every subcommand assembles a Report: the command name, an echo of its
inputs (file paths with content hashes, flag values), the outcome payload,
and a status.  With --json the report prints as canonical JSON (sorted
keys, two-space indent); identical invocations produce byte-identical
output.  Exit codes: 0 ok, 1 domain error (bad data, exceeded budgets),
2 usage error (bad flags, out-of-range indices).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Sequence

from .bounds import bound_final, bound_lpsx, bound_main, rank2_bounds
from .certificates import (
    check_spike,
    check_stack,
    span_decompose,
    verify_extension_bound,
    verify_spike_bound,
    verify_stack_bound,
)
from .errors import DomainError
from .families import FAMILIES, construct_family, direct_sum
from .linalg import delta_of, is_delta_modular, rank
from .matrix import IntMatrix, emit_matrix, parallel_classes, parse_matrix
from .matroid import MinorView, is_vertically_s_connected
from .search import DEFAULT_EXACT_BUDGET, exact_maximum, rank2_maximum


def _threads_value(text: str) -> str:
    # accepted for interface compatibility; results never depend on it
    if text == "auto":
        return text
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or a positive integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"thread count must be positive, got {n}")
    return text


def _read_text(path: str) -> tuple[str, dict]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from exc
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return text, {"path": path, "sha256": digest}


def _read_matrix(path: str) -> tuple[IntMatrix, dict]:
    text, echo = _read_text(path)
    return parse_matrix(text), echo


def _parse_vector(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError(f"empty entry in vector {text!r}")
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"non-integer entry {tok!r} in vector {text!r}") from None
    if not out:
        raise ValueError("empty vector")
    return tuple(out)


def _parse_parts(text: str) -> list[list[int]]:
    """Parts like "0-3;4-7": ';' between parts, ',' or 'a-b' ranges inside."""
    parts: list[list[int]] = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty part in {text!r}")
        part: list[int] = []
        for tok in chunk.split(","):
            tok = tok.strip()
            if "-" in tok:
                lo_s, _, hi_s = tok.partition("-")
                lo, hi = int(lo_s), int(hi_s)
                if hi < lo:
                    raise ValueError(f"descending range {tok!r} in parts")
                part.extend(range(lo, hi + 1))
            else:
                part.append(int(tok))
        parts.append(part)
    return parts


# ---------------------------------------------------------------- handlers


def _run_delta(args) -> tuple[dict, dict, str]:
    a, echo = _read_matrix(args.file)
    inputs = {"file": echo, "limit": args.limit}
    if args.limit is None:
        rep = delta_of(a)
        outcome = rep.as_dict()
        human = (
            f"rank {rep.rank}\n"
            f"delta {rep.delta}\n"
            f"witness rows {' '.join(map(str, rep.witness_rows))}\n"
            f"witness cols {' '.join(map(str, rep.witness_cols))}"
        )
        return inputs, outcome, human
    within = is_delta_modular(a, args.limit)
    r = rank(a)
    outcome = {"rank": r, "limit": args.limit, "within_limit": within}
    human = f"rank {r}\nwithin limit {args.limit}: {'yes' if within else 'no'}"
    return inputs, outcome, human


def _run_points(args) -> tuple[dict, dict, str]:
    a, echo = _read_matrix(args.file)
    pc = parallel_classes(a)
    outcome = {
        "points": pc.points,
        "classes": [list(c) for c in pc.classes],
        "loops": list(pc.loops),
    }
    lines_out = [f"points {pc.points}"]
    for i, cls in enumerate(pc.classes):
        lines_out.append(f"class {i}: {' '.join(map(str, cls))}")
    if pc.loops:
        lines_out.append(f"loops: {' '.join(map(str, pc.loops))}")
    return {"file": echo}, outcome, "\n".join(lines_out)


def _render_certificate(payload: dict) -> str:
    if payload["verified"]:
        body = json.dumps(payload["indices"], sort_keys=True)
        return f"certified {payload['kind']}\n{body}"
    return f"rejected {payload['kind']}: {payload['reason']}"


def _run_check_spike(args) -> tuple[dict, dict, str]:
    a, echo = _read_matrix(args.file)
    result = check_spike(a, args.tip)
    outcome = result.as_dict()
    return {"file": echo, "tip": args.tip}, outcome, _render_certificate(outcome)


def _run_check_stack(args) -> tuple[dict, dict, str]:
    a, echo = _read_matrix(args.file)
    parts = _parse_parts(args.parts)
    result = check_stack(MinorView(a), parts, args.m)
    outcome = result.as_dict()
    inputs = {"file": echo, "parts": args.parts, "m": args.m}
    return inputs, outcome, _render_certificate(outcome)


def _run_check_vconn(args) -> tuple[dict, dict, str]:
    a, echo = _read_matrix(args.file)
    connected = is_vertically_s_connected(MinorView(a), args.s)
    outcome = {"s": args.s, "connected": connected}
    human = f"vertically {args.s}-connected: {'yes' if connected else 'no'}"
    return {"file": echo, "s": args.s}, outcome, human


def _run_decompose(args) -> tuple[dict, dict, str]:
    f = _parse_vector(args.vector)
    cert = span_decompose(f)
    outcome = cert.as_dict()
    rows = [f"target {' '.join(map(str, cert.target))}", f"bound k={cert.k}"]
    for col in cert.chosen:
        rows.append(f"chosen {' '.join(map(str, col))}")
    return {"vector": args.vector}, outcome, "\n".join(rows)


def _run_construct(args) -> tuple[dict, dict, str]:
    if args.family == "direct_sum":
        if not args.params:
            raise ValueError("direct_sum takes one or more matrix files")
        mats, echoes = [], []
        for path in args.params:
            a, echo = _read_matrix(path)
            mats.append(a)
            echoes.append(echo)
        built = direct_sum(*mats)
        inputs = {"family": "direct_sum", "files": echoes}
    else:
        built = construct_family(args.family, args.params)
        inputs = {"family": args.family, "params": [int(p) for p in args.params]}
    text = emit_matrix(built)
    outcome = {"rows": built.rows, "cols": built.cols, "matrix": text}
    return inputs, outcome, text.rstrip("\n")


def _run_search(args) -> tuple[dict, dict, str]:
    if args.subcommand == "rank2":
        result = rank2_maximum(args.delta, box_scale=args.box_scale)
        inputs = {"delta": args.delta, "box_scale": args.box_scale}
    else:
        budget = args.budget if args.budget is not None else DEFAULT_EXACT_BUDGET
        result = exact_maximum(args.rank, args.delta, budget=budget)
        inputs = {"rank": args.rank, "delta": args.delta, "budget": budget}
    outcome = result.as_dict()
    human = (
        f"maximum {result.maximum} (rank {result.rank}, delta <= {result.delta_bound})\n"
        f"witness {' ; '.join(','.join(map(str, c)) for c in result.witness)}\n"
        f"exhaustive {'yes' if result.exhaustive else 'no'}\n"
        f"nodes {result.nodes_explored}"
    )
    return inputs, outcome, human


def _run_bounds(args) -> tuple[dict, dict, str]:
    d, r = args.delta, args.rank
    rk2 = rank2_bounds(d)
    outcome = {
        "delta": d,
        "rank": r,
        "lpsx": bound_lpsx(d, r),
        "main": bound_main(d, r),
        "final": bound_final(d, r),
        "rank2": rk2.as_dict(),
    }
    human = (
        f"lpsx {outcome['lpsx']}\n"
        f"main {outcome['main']}\n"
        f"final {outcome['final']}\n"
        f"rank2 sandwich [{rk2.lower}, {rk2.upper}]"
        f"{'' if rk2.consistent else ' (inconsistent)'}"
    )
    return {"delta": d, "rank": r}, outcome, human


_VERIFIERS = {
    "prop1": verify_spike_bound,
    "prop2": verify_stack_bound,
    "prop3": verify_extension_bound,
}


def _run_verify(args) -> tuple[dict, dict, str]:
    if args.rank is not None and args.prop != "prop3":
        raise ValueError("--rank applies to prop3 only")
    if args.prop == "prop3" and args.rank is not None:
        verdict = verify_extension_bound(args.delta, args.rank)
    else:
        verdict = _VERIFIERS[args.prop](args.delta)
    outcome = verdict.as_dict()
    rows = []
    for chk in verdict.checks:
        mark = "pass" if chk.passed else "FAIL"
        rows.append(f"[{mark}] {chk.label}: {chk.observed}")
    tail = "passed" if verdict.passed else "FAILED"
    if verdict.skipped:
        tail += f" (partly skipped: {verdict.reason})"
    rows.append(f"{verdict.name}: {tail}")
    inputs = {"property": args.prop, "delta": args.delta, "rank": args.rank}
    return inputs, outcome, "\n".join(rows)


_HANDLERS = {
    "delta": _run_delta,
    "points": _run_points,
    "check spike": _run_check_spike,
    "check stack": _run_check_stack,
    "check vconn": _run_check_vconn,
    "decompose": _run_decompose,
    "construct": _run_construct,
    "search rank2": _run_search,
    "search exact": _run_search,
    "bounds": _run_bounds,
    "verify": _run_verify,
}


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--threads",
        type=_threads_value,
        default="auto",
        help="worker count ('auto' or a positive integer); never affects results",
    )

    parser = argparse.ArgumentParser(
        prog="deltamod",
        description="Exact toolkit for bounded-subdeterminant integer matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", parents=[common], help="largest rank-size subdeterminant")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--limit", type=int, default=None, help="test |det| <= LIMIT instead")

    p = sub.add_parser("points", parents=[common], help="count pairwise non-parallel nonzero columns")
    p.add_argument("file", help="matrix file, or - for stdin")

    check = sub.add_parser("check", help="certify or refute a structure")
    check_sub = check.add_subparsers(dest="subcommand", required=True)
    p = check_sub.add_parser("spike", parents=[common], help="spike certificate for a tip column")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--tip", type=int, required=True, help="tip column index")
    p = check_sub.add_parser("stack", parents=[common], help="stack certificate for ordered parts")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--parts", required=True, help="column parts, e.g. \"0-3;4-7\"")
    p.add_argument("--m", type=int, required=True, help="per-part rank cap")
    p = check_sub.add_parser("vconn", parents=[common], help="vertical s-connectivity")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--s", type=int, required=True, help="connectivity order")

    p = sub.add_parser("decompose", parents=[common], help="span a vector by few unit-difference columns")
    p.add_argument("--vector", required=True, help="comma-separated integers, e.g. \"2,-1,-1\"")

    p = sub.add_parser("construct", parents=[common], help="emit a named matrix family")
    p.add_argument("family", help=f"one of: {', '.join(sorted(FAMILIES) + ['direct_sum'])}")
    p.add_argument("params", nargs="*", help="integer parameters (files for direct_sum)")

    search = sub.add_parser("search", help="exhaustive maximum-points searches")
    search_sub = search.add_subparsers(dest="subcommand", required=True)
    p = search_sub.add_parser("rank2", parents=[common], help="rank-2 maximum by clique search")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--box-scale", type=int, default=1, dest="box_scale",
                   help="candidate box multiplier (soundness regression knob)")
    p = search_sub.add_parser("exact", parents=[common], help="general-rank maximum by basis enumeration")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="search node budget")

    p = sub.add_parser("bounds", parents=[common], help="closed-form bound table")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="end-to-end certified verifications")
    p.add_argument("prop", choices=("prop1", "prop2", "prop3"),
                   help="prop1 spikes, prop2 stacks, prop3 spanning extensions")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="override rank (prop3 only)")

    return parser


def _command_name(args) -> str:
    sub = getattr(args, "subcommand", None)
    if args.command in ("check", "search") and sub:
        return f"{args.command} {sub}"
    return args.command


def _emit(report: dict, as_json: bool, human: str) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    elif human:
        sys.stdout.write(human + "\n")


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    command = _command_name(args)
    handler = _HANDLERS[command]
    try:
        inputs, outcome, human = handler(args)
    except DomainError as exc:
        _report_error(command, args, str(exc))
        return 1
    except (ValueError, IndexError) as exc:
        _report_error(command, args, str(exc))
        return 2
    report = {
        "schema": 1,
        "command": command,
        "inputs": inputs,
        "outcome": outcome,
        "status": "ok",
    }
    _emit(report, args.json, human)
    return 0


def _report_error(command: str, args, message: str) -> None:
    if getattr(args, "json", False):
        report = {
            "schema": 1,
            "command": command,
            "inputs": None,
            "outcome": None,
            "status": "error",
            "message": message,
        }
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
