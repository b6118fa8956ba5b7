"""Command-line interface: solve, translate, transform, and check.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 semantic refusal
(non-tight program, transform precondition, failed check), 4 variable cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import solve, transforms
from .encodings import from_oprogram, from_pw_sat
from .errors import (
    CapExceededError,
    ParseError,
    TightnessError,
    TransformError,
    VocabularyMismatchError,
    WsysError,
)
from .formats import parse_lp, parse_wcnf, parse_wsystem, write_wcnf, write_wsystem
from .solve import Sense
from .testkit import run_checks
from .translate import oprogram_to_pw

E_OK, E_USAGE, E_PARSE, E_SEMANTIC, E_CAP = 0, 1, 2, 3, 4

_FORMAT_EXTENSIONS = {".wcnf": "wcnf", ".cnf": "wcnf", ".lp": "lp", ".wsys": "wsys"}
_DEFAULT_SENSE = {"wcnf": Sense.MAX, "wsys": Sense.MAX, "lp": Sense.MIN}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wsys", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("input", nargs="?", default="-", help="input path, or - for stdin")
        p.add_argument("--format", choices=["wcnf", "lp", "wsys"], help="input format")
        p.add_argument(
            "--max-vars",
            type=int,
            default=None,
            help="exhaustive-solver variable cap (default 24, or WSYS_MAX_VARS)",
        )

    p_solve = sub.add_parser("solve", help="enumerate models and optimal models")
    add_common(p_solve)
    p_solve.add_argument("--sense", choices=["max", "min"], help="optimization sense")
    p_solve.add_argument("--workers", type=int, default=1)
    p_solve.add_argument("--json", action="store_true", dest="as_json")
    p_solve.add_argument("--permutation", help="comma-separated atom order (reserved)")

    p_tr = sub.add_parser("translate", help="translate a tight program to WCNF")
    add_common(p_tr)
    p_tr.add_argument("--from", dest="from_format", choices=["lp"], default="lp")
    p_tr.add_argument("--to", dest="to_format", choices=["wcnf"], default="wcnf")
    p_tr.add_argument("--sense", choices=["max", "min"])
    p_tr.add_argument("--output", "-o", help="output path (default stdout)")

    p_tf = sub.add_parser("transform", help="apply rewrites and print the native format")
    add_common(p_tf)
    p_tf.add_argument(
        "--apply",
        required=True,
        help="comma-separated rewrites: drop_zero_weights, scale_weights:<a>, "
        "normalize_levels, negate_all_weights, eliminate_sign:<max|min>, "
        "flip:<label>, flatten_levels, drop_invariant:<l1+l2+..>:<max|min>",
    )

    p_check = sub.add_parser("check", help="run the metatheorem suite on an instance")
    add_common(p_check)
    p_check.add_argument("--json", action="store_true", dest="as_json")
    return parser


def _read_input(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _detect_format(args) -> str:
    if args.format:
        return args.format
    if args.input != "-":
        ext = os.path.splitext(args.input)[1].lower()
        if ext in _FORMAT_EXTENSIONS:
            return _FORMAT_EXTENSIONS[ext]
    raise _UsageError("cannot infer the input format; pass --format {wcnf,lp,wsys}")


def _max_vars(args) -> int:
    if args.max_vars is not None:
        return args.max_vars
    env = os.environ.get("WSYS_MAX_VARS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"WSYS_MAX_VARS must be an integer, got {env!r}") from None
    return solve.DEFAULT_MAX_VARS


def _load_system(fmt: str, text: str):
    """Returns (w-system, o-program or None)."""
    if fmt == "wcnf":
        return from_pw_sat(parse_wcnf(text)), None
    if fmt == "lp":
        op = parse_lp(text)
        return from_oprogram(op), op
    return parse_wsystem(text), None


def _interp_text(i) -> str:
    return "{" + ",".join(sorted(i.members)) + "}"


def _cmd_solve(args, stdout) -> int:
    fmt = _detect_format(args)
    text = _read_input(args.input, sys.stdin)
    system, _ = _load_system(fmt, text)
    sense = Sense(args.sense) if args.sense else _DEFAULT_SENSE[fmt]
    report = solve.solve_report(
        system, sense, max_vars=_max_vars(args), workers=args.workers
    )
    if args.as_json:
        payload = {
            "command": "solve",
            "sense": sense.value,
            "vocabulary": list(system.vocabulary.names),
            "models": [sorted(m.members) for m in report.models],
            "optimal": [sorted(m.members) for m in report.optimal],
            "optimum": [
                {
                    "model": sorted(m.members),
                    "sums": {str(l): v for l, v in sorted(sums.items())},
                }
                for m, sums in zip(report.optimal, report.per_level_sums)
            ],
        }
        stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return E_OK
    lines = [f"MODELS {len(report.models)}"]
    lines += [_interp_text(m) for m in report.models]
    lines.append(f"OPTIMAL {len(report.optimal)}")
    lines += [_interp_text(m) for m in report.optimal]
    lines.append("OPTIMUM")
    for m, sums in zip(report.optimal, report.per_level_sums):
        parts = [_interp_text(m)]
        parts += [f"@{l}={v}" for l, v in sorted(sums.items())]
        lines.append(" ".join(parts))
    stdout.write("\n".join(lines) + "\n")
    return E_OK


def _cmd_translate(args, stdout) -> int:
    fmt = args.from_format
    if args.format and args.format != fmt:
        raise _UsageError("translate reads logic programs; use --from lp")
    text = _read_input(args.input, sys.stdin)
    op = parse_lp(text)
    sense = Sense(args.sense) if args.sense else Sense.MIN
    problem, _fresh = oprogram_to_pw(op, sense)
    out = write_wcnf(problem)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return E_OK


def _parse_apply_item(item: str):
    parts = item.split(":")
    name, rest = parts[0], parts[1:]
    if name == "drop_zero_weights" and not rest:
        return lambda w: transforms.drop_zero_weights(w)
    if name == "scale_weights" and len(rest) == 1:
        try:
            factor = int(rest[0])
        except ValueError:
            raise _UsageError(f"scale_weights needs an integer factor, got {rest[0]!r}") from None
        return lambda w: transforms.scale_weights(w, factor)
    if name == "normalize_levels" and not rest:
        return lambda w: transforms.normalize_levels(w)
    if name == "negate_all_weights" and not rest:
        return lambda w: transforms.negate_all_weights(w)
    if name == "eliminate_sign" and len(rest) <= 1:
        keep = Sense(rest[0]) if rest else Sense.MAX
        return lambda w: transforms.eliminate_sign(w, keep)
    if name == "flip" and len(rest) == 1:
        label = rest[0]
        return lambda w: transforms.flip_single_condition(w, label)
    if name == "flatten_levels" and not rest:
        return lambda w: transforms.flatten_levels(w)
    if name == "drop_invariant" and len(rest) == 2:
        labels = rest[0].split("+")
        try:
            sense = Sense(rest[1])
        except ValueError:
            raise _UsageError(f"drop_invariant sense must be max or min, got {rest[1]!r}") from None
        return lambda w: transforms.drop_invariant_conditions(w, labels, sense)
    raise _UsageError(f"unknown transform {item!r}")


def _cmd_transform(args, stdout) -> int:
    fmt = _detect_format(args)
    text = _read_input(args.input, sys.stdin)
    system, _ = _load_system(fmt, text)
    steps = [_parse_apply_item(item) for item in args.apply.split(",") if item]
    for step in steps:
        system = step(system)
    stdout.write(write_wsystem(system))
    return E_OK


def _cmd_check(args, stdout) -> int:
    fmt = _detect_format(args)
    text = _read_input(args.input, sys.stdin)
    system, oprog = _load_system(fmt, text)
    results = run_checks(system, oprog=oprog, max_vars=_max_vars(args))
    all_passed = all(r.passed for r in results)
    if args.as_json:
        payload = {
            "command": "check",
            "passed": all_passed,
            "results": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
        }
        stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            suffix = f"  ({r.detail})" if r.detail else ""
            stdout.write(f"{status} {r.name}{suffix}\n")
        stdout.write(("OK" if all_passed else "FAILED") + f" {len(results)} checks\n")
    return E_OK if all_passed else E_SEMANTIC


def run(argv):
    """Run one command, capturing output: returns (exit_code, stdout, stderr)."""
    import io

    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def main(argv=None, stdout=None, stderr=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb == "solve":
            return _cmd_solve(args, stdout)
        if args.verb == "translate":
            return _cmd_translate(args, stdout)
        if args.verb == "transform":
            return _cmd_transform(args, stdout)
        return _cmd_check(args, stdout)
    except _UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return E_USAGE
    except ParseError as e:
        stderr.write(f"input:{e.span.line}:{e.span.column}: error: {e.message}\n")
        return E_PARSE
    except CapExceededError as e:
        stderr.write(f"error: {e}\n")
        return E_CAP
    except (TightnessError, TransformError, VocabularyMismatchError) as e:
        stderr.write(f"error: {e}\n")
        return E_SEMANTIC
    except (ValueError, WsysError) as e:
        stderr.write(f"error: {e}\n")
        return E_SEMANTIC
    except OSError as e:
        stderr.write(f"error: {e}\n")
        return E_USAGE


if __name__ == "__main__":
    sys.exit(main())
