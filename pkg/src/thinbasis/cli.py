"""Command-line interface.

Thin shell over the handlers module: parse flags, pick the construction,
run the command, render the envelope.  Exit codes: 0 on success, 1 when
verification finds a gap, 2 on invalid arguments, 3 when a computation
exceeds the memory cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import handlers, wire
from .errors import DomainError, InvalidParamsError, ResourceLimitError


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thinbasis",
        description=(
            "Construct thin additive bases, decompose integers into exactly h "
            "basis elements, and verify coverage by brute force."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--h", type=int, help="order of the basis")
        p.add_argument("--r", type=_int_list, metavar="R1,R2,...",
                       help="progression residues (selects the scheme construction)")
        p.add_argument("--P", type=int, help="progression step (default: smallest valid)")
        p.add_argument("--k1", type=int, help="scheme start index (default: k0(h))")
        p.add_argument("--g", type=int, help="digit base (selects the base-g construction)")
        p.add_argument("--aprime", type=_int_list, metavar="A1,A2,...",
                       help="generators (selects the coprime-multiples construction)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    common(sub.add_parser("construct", help="derive and print the construction's parameters"))

    p = sub.add_parser("decompose", help="write n as a sum of exactly h basis elements")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("enumerate", help="list basis elements up to x")
    p.add_argument("--x", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="brute-force h-fold coverage of [0, N]")
    p.add_argument("--N", type=int, required=True)
    common(p)

    p = sub.add_parser("profile", help="counting function and thinness ratios up to x")
    p.add_argument("--x", type=int, required=True)
    common(p)

    p = sub.add_parser("compare", help="profile the constructions side by side up to x")
    p.add_argument("--x", type=int, required=True)
    common(p)

    return parser


def _construction_kwargs(args: argparse.Namespace) -> dict:
    return {"h": args.h, "r": args.r, "P": args.P, "k1": args.k1,
            "g": args.g, "aprime": args.aprime}


def _dispatch(args: argparse.Namespace) -> dict:
    kwargs = _construction_kwargs(args)
    if args.command == "construct":
        return handlers.handle_construct(**kwargs)
    if args.command == "decompose":
        return handlers.handle_decompose(args.n, **kwargs)
    if args.command == "enumerate":
        return handlers.handle_enumerate(args.x, **kwargs)
    if args.command == "verify":
        return handlers.handle_verify(args.N, jobs=args.jobs, seed=args.seed, **kwargs)
    if args.command == "profile":
        return handlers.handle_profile(args.x, **kwargs)
    if args.command == "compare":
        return handlers.handle_compare(args.x, **kwargs)
    raise InvalidParamsError(f"unknown command {args.command!r}")


def _render_csv(payload: dict) -> str:
    command = payload["command"]
    if command not in ("profile", "compare"):
        raise InvalidParamsError("csv output is only available for profile and compare")
    buf = io.StringIO()
    writer = csv.writer(buf)
    if command == "profile":
        writer.writerow(["x", "A", "ratio_decimal"])
        for row in payload["result"]["rows"]:
            writer.writerow([row["x"], row["A"], row["ratio_decimal"]])
    else:
        writer.writerow(["construction", "x", "A", "ratio_decimal"])
        for part in payload["result"]["parts"]:
            for row in part["rows"]:
                writer.writerow([part["construction"], row["x"], row["A"], row["ratio_decimal"]])
    return buf.getvalue()


def _render_text(payload: dict) -> str:
    command = payload["command"]
    result = payload["result"]
    lines = [f"{payload['construction']} {command}"]
    if command == "construct" and payload["construction"] == "shatrovskii":
        lines.append(f"h={result['h']} r={result['r']} P={result['P']} "
                     f"k0={result['k0']} k1={result['k1']}")
        for row in result["rows"]:
            lines.append(f"  k={row['k']} s={row['s']} S={row['S']} a={row['a']}")
        lines.append("  ell: " + " ".join(f"t={e['t']}:{e['ell']}" for e in result["ell"]))
    elif command == "decompose":
        parts = []
        for term in result["terms"]:
            if term["factor"]:
                a, v = term["factor"]
                parts.append(f"{term['element']} ({a}*{v})")
            else:
                parts.append(str(term["element"]))
        lines.append(f"{result['n']} = " + " + ".join(parts))
    elif command == "enumerate":
        lines.append(f"count={result['count']}")
        lines.append(" ".join(str(e) for e in result["elements"]))
    elif command == "verify":
        lines.append(f"N={result['N']} h={result['h']} covered={result['covered']} "
                     f"first_gap={result['first_gap']} elements_used={result['elements_used']}")
        if "spot_check" in result:
            sc = result["spot_check"]
            lines.append(f"spot_check samples={sc['samples']} failures={sc['failures']}")
    elif command in ("profile", "compare"):
        parts = result["parts"] if command == "compare" else [result]
        for part in parts:
            lines.append(f"{part['construction']} max_ratio={part['max_ratio_decimal']}")
            for row in part["rows"]:
                lines.append(f"  x={row['x']} A={row['A']} ratio={row['ratio_decimal']}")
    else:
        lines.append(wire.dumps(result).rstrip())
    return "\n".join(lines) + "\n"


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return wire.dumps(payload)
    if fmt == "csv":
        return _render_csv(payload)
    return _render_text(payload)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _dispatch(args)
        rendered = _render(payload, args.format)
    except (InvalidParamsError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc} (required_bytes={exc.required_bytes}, "
              f"cap_bytes={exc.cap_bytes})", file=sys.stderr)
        return 3

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)

    if args.command == "verify" and not payload["result"]["covered"]:
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(run())
