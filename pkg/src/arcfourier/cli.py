"""JSON command-line front end.

Every subcommand reads one JSON document from stdin (or a file argument) and
writes one JSON document to stdout.  Complex numbers are ``[re, im]`` pairs
and angles are radians.

Exit codes: 0 success / recovered, 1 not in range or test failure,
2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .arcset import ArcUnion, fourier_coefficients, normalize, random_arc_union
from .errors import ArcFourierError, NoConvergence
from .recovery import Tolerances, endpoint_error, recover

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


class InvalidInput(ValueError):
    pass


def _complex_to_json(z) -> list:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _number(x, what):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InvalidInput(f"{what} must be a number, got {x!r}")
    if not math.isfinite(x):
        raise InvalidInput(f"{what} must be finite")
    return float(x)


def _complex_from_json(x, what) -> complex:
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise InvalidInput(f"{what} must be a [re, im] pair")
        return complex(_number(x[0], what), _number(x[1], what))
    return complex(_number(x, what), 0.0)


def arcs_to_json(E: ArcUnion) -> dict:
    return {"full": E.is_full, "arcs": [[float(s), float(e)] for s, e in E.arcs]}


def parse_arc_input(doc) -> tuple[ArcUnion, int]:
    if not isinstance(doc, dict):
        raise InvalidInput("expected a JSON object with 'arcs' (or 'full') and 'n'")
    if "n" not in doc:
        raise InvalidInput("missing 'n'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidInput("'n' must be a nonnegative integer")
    if doc.get("full", False):
        return ArcUnion.full(), n
    raw = doc.get("arcs", [])
    if not isinstance(raw, list):
        raise InvalidInput("'arcs' must be a list of [start, end] pairs")
    pairs = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InvalidInput(f"arc {i} must be a [start, end] pair")
        pairs.append((_number(pair[0], f"arc {i} start"), _number(pair[1], f"arc {i} end")))
    try:
        return normalize(pairs), n
    except ArcFourierError as exc:
        raise InvalidInput(str(exc)) from exc


def parse_coefficients(doc) -> np.ndarray:
    if isinstance(doc, dict):
        if "coefficients" not in doc:
            raise InvalidInput("missing 'coefficients'")
        doc = doc["coefficients"]
    if not isinstance(doc, list) or not doc:
        raise InvalidInput("coefficients must be a nonempty list of [re, im] pairs")
    return np.array([_complex_from_json(x, f"coefficient {k}") for k, x in enumerate(doc)])


def outcome_to_json(outcome) -> dict:
    if outcome.ok:
        return {
            "status": "recovered",
            **arcs_to_json(outcome.arcs),
            "order": int(outcome.order),
            "residual": float(outcome.residual),
            "norm": float(outcome.norm),
        }
    out = {"status": "not_in_range", "reason": outcome.reason.value}
    if outcome.norm is not None:
        out["norm"] = float(outcome.norm)
    if outcome.mismatch is not None:
        out["mismatch"] = float(outcome.mismatch)
    if outcome.detail:
        out["detail"] = outcome.detail
    return out


def cmd_forward(doc, tolerances):
    E, n = parse_arc_input(doc)
    c = fourier_coefficients(E, n)
    return {"n": n, "coefficients": [_complex_to_json(x) for x in c.c]}, EXIT_OK


def cmd_recover(doc, tolerances):
    c = parse_coefficients(doc)
    outcome = recover(c, tolerances)
    return outcome_to_json(outcome), EXIT_OK if outcome.ok else EXIT_REJECTED


def cmd_roundtrip(doc, tolerances):
    E, n = parse_arc_input(doc)
    if E.count > n:
        raise InvalidInput(f"{E.count} arcs need n >= {E.count}")
    outcome = recover(fourier_coefficients(E, n), tolerances)
    report = {"n": n, "input": arcs_to_json(E), "outcome": outcome_to_json(outcome)}
    if not outcome.ok:
        report["error"] = None
        return report, EXIT_REJECTED
    err = endpoint_error(E, outcome.arcs)
    report["error"] = err if math.isfinite(err) else None
    return report, EXIT_OK if math.isfinite(err) else EXIT_REJECTED


def selftest(count: int, seed: int, n_max: int, pad: int = 0, threshold: float = 1e-6,
             tolerances: Tolerances = Tolerances()) -> dict:
    """Round-trip ``count`` seeded random unions; see the README for the generator."""
    rng = np.random.default_rng(seed)
    errors, failures = [], []
    for index in range(count):
        k = int(rng.integers(0, n_max + 1))
        E = random_arc_union(rng, k)
        n = k + pad
        outcome = recover(fourier_coefficients(E, n), tolerances)
        if not outcome.ok:
            failures.append({"index": index, "input": arcs_to_json(E), "n": n,
                             "message": outcome.reason.value})
            continue
        err = endpoint_error(E, outcome.arcs)
        if not err <= threshold:
            failures.append({"index": index, "input": arcs_to_json(E), "n": n,
                             "message": f"endpoint error {err!r}"})
        if math.isfinite(err):
            errors.append(err)
    return {
        "count": count,
        "seed": seed,
        "n_max": n_max,
        "pad": pad,
        "threshold": threshold,
        "max_error": max(errors) if errors else 0.0,
        "mean_error": float(np.mean(errors)) if errors else 0.0,
        "failures": failures,
        "passed": not failures,
    }


def cmd_selftest(args, tolerances):
    if args.count < 0 or args.n_max < 0 or args.pad < 0:
        raise InvalidInput("--count, --n-max and --pad must be nonnegative")
    if not 0 <= args.seed < 2**64:
        raise InvalidInput("--seed must be a 64-bit unsigned integer")
    if args.n_max > 30:
        raise InvalidInput("--n-max above 30 does not fit arcs with 0.05 rad separation")
    summary = selftest(args.count, args.seed, args.n_max, args.pad, args.threshold, tolerances)
    return summary, EXIT_OK if summary["passed"] else EXIT_REJECTED


def _add_tolerance_flags(p):
    defaults = Tolerances()
    p.add_argument("--tol-norm", type=float, default=defaults.tol_norm,
                   help="accepted deviation of ||M|| from 1 (default %(default)g)")
    p.add_argument("--tol-eig", type=float, default=defaults.tol_eig,
                   help="eigenvalue band around 1 for M*M (default %(default)g)")
    p.add_argument("--tol-circle", type=float, default=defaults.tol_circle,
                   help="allowed | |z| - 1 | for endpoint roots (default %(default)g)")
    p.add_argument("--tol-verify", type=float, default=defaults.tol_verify,
                   help="max mismatch of the re-derived Taylor column (default %(default)g)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcfourier",
        description="Fourier coefficients of unions of arcs, and exact recovery from them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (
        ("forward", "coefficients 0..n of a union of arcs"),
        ("recover", "decide whether coefficients come from <= n arcs and recover them"),
        ("roundtrip", "forward then recover, report the endpoint error"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", nargs="?", default="-", help="JSON file (default: stdin)")
        _add_tolerance_flags(p)
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = sub.add_parser("selftest", help="round-trip seeded random arc unions")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0, help="64-bit seed for PCG64")
    p.add_argument("--n-max", type=int, default=4, help="largest arc count drawn")
    p.add_argument("--pad", type=int, default=0, help="use n = arc count + pad")
    p.add_argument("--threshold", type=float, default=1e-6, help="max endpoint error (rad)")
    _add_tolerance_flags(p)
    p.add_argument("--pretty", action="store_true")
    return parser


COMMANDS = {"forward": cmd_forward, "recover": cmd_recover, "roundtrip": cmd_roundtrip}


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"could not read JSON input: {exc}") from exc


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        tolerances = Tolerances(args.tol_norm, args.tol_eig, args.tol_circle, args.tol_verify)
        if args.command == "selftest":
            result, code = cmd_selftest(args, tolerances)
        else:
            result, code = COMMANDS[args.command](_read_json(args.input), tolerances)
    except NoConvergence as exc:
        print(json.dumps({"status": "error", "message": str(exc)}), file=stdout)
        print(f"arcfourier: numerical failure: {exc}", file=stderr)
        return EXIT_NUMERICAL
    except (InvalidInput, ValueError) as exc:
        print(f"arcfourier: invalid input: {exc}", file=stderr)
        return EXIT_INVALID
    print(json.dumps(result, indent=2 if args.pretty else None), file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
