"""``monorank`` command line.

Exit status: 0 on success, 1 when a decomposition is missing or fails to
verify, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path

from .apolarity import Decomposition, NoSolution, verify_decomposition
from .constructors import decompose_real
from .generators import random_gap_system
from .hermite import GapSystem, QuotientAlgebra, check_gap_obstruction, signature
from .monomial import Monomial
from .ranks import METHODS, rank_report


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _load_json_arg(value: str):
    """A path to a JSON file, ``-`` for stdin, or inline JSON text."""
    if value == "-":
        text = sys.stdin.read()
    elif value.lstrip().startswith(("{", "[")):
        text = value
    else:
        path = Path(value)
        if not path.is_file():
            raise UsageError(f"no such file: {value}")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def _report_text(report) -> str:
    exact = report.real_exact if report.real_exact is not None else "unknown"
    return (
        f"monomial      {report.monomial}\n"
        f"complex rank  {report.complex_rank}\n"
        f"real rank     {exact} (bounds {report.real_lower}..{report.real_upper}, via {report.method})\n"
        f"real = complex  {'yes' if report.equality else 'no'}"
    )


def _decomposition_text(dec: Decomposition) -> str:
    lines = [f"{dec.target} = sum of {dec.size} powers of degree {dec.degree} ({dec.method})"]
    for c, form in dec.terms:
        lines.append(f"  {c} * ({form})^{dec.degree}")
    return "\n".join(lines)


def cmd_rank(args, out) -> int:
    report = rank_report(Monomial.parse(args.monomial))
    out.write((_dump(report.to_json()) if args.mode == "json" else _report_text(report)) + "\n")
    return 0


def cmd_decompose(args, out) -> int:
    m = Monomial.parse(args.monomial)
    try:
        dec = decompose_real(m, method=args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write((_dump(dec.to_json()) if args.mode == "json" else _decomposition_text(dec)) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    data = _load_json_arg(args.decomposition)
    try:
        dec = Decomposition.from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed decomposition: {exc!r}") from exc
    ok = verify_decomposition(dec)
    if args.mode == "json":
        out.write(_dump({"target": str(dec.target), "size": dec.size, "verified": ok}) + "\n")
    else:
        out.write(f"{dec.target}: {dec.size} terms, {'verified' if ok else 'NOT verified'}\n")
    if not ok:
        residue = dec.expand() - dec.target.to_polynomial()
        sys.stderr.write(f"verification failed; expansion minus target = {residue}\n")
        return 1
    return 0


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _gap_system_from_args(args) -> GapSystem:
    if args.seed is not None:
        if args.system is not None:
            raise UsageError("give either a system or --seed, not both")
        return random_gap_system(random.Random(args.seed))
    if args.system is None:
        raise UsageError("hermite-count needs a system (file or inline JSON) or --seed")
    data = _load_json_arg(args.system)
    if isinstance(data, list):
        gens, a, a0 = data, args.a, args.a0
        a = _parse_ints(a) if a is not None else None
    elif isinstance(data, dict):
        gens, a, a0 = data.get("generators"), data.get("a"), data.get("a0")
    else:
        raise UsageError("system JSON must be a list of generators or an object")
    if gens is None or a is None or a0 is None:
        raise UsageError("a system needs generators, a = (a1..an) and a0")
    return GapSystem.from_generators([str(g) for g in gens], [int(v) for v in a], int(a0))


def cmd_hermite(args, out) -> int:
    system = _gap_system_from_args(args)
    alg = QuotientAlgebra(system)
    plus, minus, zero = signature(alg.trace_form())
    obstruction = False
    if system.a0 >= 2 and all(ai >= system.a0 for ai in system.a):
        obstruction = check_gap_obstruction(system)
    result = {
        "dim": alg.dim,
        "signature": [plus, minus, zero],
        "real_points": plus - minus,
        "complex_points": plus + minus,
        "gap_obstruction": obstruction,
    }
    if args.mode == "json":
        out.write(_dump(result) + "\n")
    else:
        gens = ", ".join(g.to_text("X", 1) for g in system.generators())
        out.write(
            f"system      {gens}\n"
            f"dimension   {alg.dim}\n"
            f"signature   +{plus} -{minus} 0x{zero}\n"
            f"real points {plus - minus} of {plus + minus} distinct complex\n"
        )
    return 0


def canonical_exponents(max_degree: int, max_vars: int):
    """Sorted exponent vectors (all >= 1) by variable count, degree, then lex."""
    for nv in range(2, max_vars + 1):
        for deg in range(nv, max_degree + 1):
            for exps in itertools.combinations_with_replacement(range(1, deg + 1), nv):
                if sum(exps) == deg:
                    yield exps


def cmd_table(args, out) -> int:
    if args.max_degree < 2 or args.max_vars < 2:
        raise UsageError("--max-degree and --max-vars must be at least 2")
    for exps in canonical_exponents(args.max_degree, args.max_vars):
        m = Monomial(exps)
        report = rank_report(m)
        if args.mode == "json":
            row = report.to_json()
            if args.certify:
                row["decomposition"] = decompose_real(m).to_json()
            out.write(_dump(row) + "\n")
        else:
            line = f"{report.monomial:<24} C={report.complex_rank:<5} R in [{report.real_lower}, {report.real_upper}] {report.method}"
            if args.certify:
                line += f" certified({decompose_real(m).size})"
            out.write(line + "\n")
        out.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="mode", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="mode", action="store_const", const="text", help="human-readable output")
    common.set_defaults(mode="json")

    parser = argparse.ArgumentParser(prog="monorank", description="Real and complex Waring ranks of monomials.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("rank", parents=[common], help="rank values and bounds of a monomial")
    p.add_argument("monomial", help='e.g. "x0^2*x1^2*x2^2"')
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("decompose", parents=[common], help="explicit verified real decomposition")
    p.add_argument("monomial")
    p.add_argument("--method", choices=METHODS, help="force a specific construction")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="check a decomposition certificate")
    p.add_argument("decomposition", help="JSON file, '-' for stdin, or inline JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hermite-count", parents=[common], help="count real solutions of a gap system")
    p.add_argument("system", nargs="?", help="JSON file or inline JSON")
    p.add_argument("--a", help="comma-separated a1..an when the system is a bare generator list")
    p.add_argument("--a0", type=int, help="gap parameter when the system is a bare generator list")
    p.add_argument("--seed", type=int, help="draw a random gap system from this seed instead")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("table", parents=[common], help="stream rank reports for all small monomials")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--max-vars", type=int, required=True)
    p.add_argument("--certify", action="store_true", help="attach a verified decomposition to each row")
    p.set_defaults(func=cmd_table)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except NoSolution as exc:
        sys.stderr.write(f"monorank: {exc}\n")
        return 1
    except (UsageError, ValueError, TypeError) as exc:
        sys.stderr.write(f"monorank: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
