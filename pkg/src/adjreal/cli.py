"""Command-line interface: decide, witness, verify, jordan, sl2, chains,
search, selftest.

All input and output is JSON with exact scalar strings; nothing is ever
rounded.  Exit codes: 0 for an affirmative result, 1 for a verified
negative / undetermined / not-found result (details in the JSON), 2 for
input errors and failed certificate verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import run_all, run_criterion
from .certificates import ReverserCertificate, verify_certificate
from .errors import (
    AdjRealError,
    NotRealizable,
    ParseError,
    SearchSpaceTooLarge,
    SpectrumNotSplit,
)
from .jordan import jordan_chevalley
from .liecore import LieContext
from .matrix import ExactMatrix
from .oracle import search_reverser
from .semisimple import decide_semisimple, witness_general_semisimple
from .symplectic import chain_decomposition, reverse_full, sl2_triple


def _load_json_arg(text: str):
    """Accept inline JSON or a path to a JSON file."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad inline JSON: {exc}") from exc
    try:
        with open(text, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {text}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON in {text}: {exc}") from exc


def _emit(payload, out_path: str | None = None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _matrix_and_context(args):
    ctx = LieContext.from_json(_load_json_arg(args.ctx))
    mat = ExactMatrix.from_json(_load_json_arg(args.matrix))
    return mat, ctx


def _cmd_decide(args) -> int:
    mat, ctx = _matrix_and_context(args)
    verdict = decide_semisimple(mat, ctx)
    _emit(verdict.to_json(), args.out)
    return 0 if verdict.is_real == "yes" else 1


def _cmd_witness(args) -> int:
    mat, ctx = _matrix_and_context(args)
    try:
        cert = witness_general_semisimple(mat, ctx, args.involution)
    except (NotRealizable, SpectrumNotSplit) as exc:
        _emit({"witness": None, "error": type(exc).__name__, "message": str(exc)})
        return 1
    _emit(cert.to_json(), args.out)
    return 0


def _cmd_verify(args) -> int:
    cert = ReverserCertificate.from_json(_load_json_arg(args.certificate))
    report = verify_certificate(cert)
    _emit(report.to_json(), args.out)
    return 0 if report.ok else 2


def _cmd_jordan(args) -> int:
    mat = ExactMatrix.from_json(_load_json_arg(args.matrix))
    _emit(jordan_chevalley(mat).to_json(), args.out)
    return 0


def _cmd_sl2(args) -> int:
    mat = ExactMatrix.from_json(_load_json_arg(args.matrix))
    _emit(sl2_triple(mat).to_json(), args.out)
    return 0


def _cmd_chains(args) -> int:
    mat = ExactMatrix.from_json(_load_json_arg(args.matrix))
    _emit(chain_decomposition(sl2_triple(mat)).to_json(), args.out)
    return 0


def _cmd_reverse(args) -> int:
    mat = ExactMatrix.from_json(_load_json_arg(args.matrix))
    try:
        cert = reverse_full(mat)
    except (SpectrumNotSplit,) as exc:
        _emit({"witness": None, "error": type(exc).__name__, "message": str(exc)})
        return 1
    _emit(cert.to_json(), args.out)
    return 0


def _cmd_search(args) -> int:
    mat, ctx = _matrix_and_context(args)
    try:
        outcome = search_reverser(mat, ctx, args.height, args.involution)
    except SearchSpaceTooLarge as exc:
        _emit({"outcome": "aborted", "error": "SearchSpaceTooLarge", "message": str(exc)})
        return 2
    _emit(outcome.to_json(), args.out)
    return 0 if outcome.found else 1


def _cmd_selftest(args) -> int:
    if args.criterion:
        results = [run_criterion(args.criterion, args.seed)]
    else:
        results = run_all(args.seed)
    for res in results:
        print(res.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adjreal",
        description=(
            "Decide adjoint reality in the classical complex Lie algebras "
            "and produce exactly verified reverser certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, ctx=True, matrix=True):
        if ctx:
            p.add_argument("--ctx", required=True, help="context JSON or file path")
        if matrix:
            p.add_argument("--matrix", required=True, help="matrix JSON or file path")
        p.add_argument("--out", help="also write the JSON result to this file")

    p = sub.add_parser("decide", help="reality verdict for a semisimple element")
    add_common(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("witness", help="construct a certified reverser")
    add_common(p)
    p.add_argument("--involution", action="store_true", help="demand g^2 = I")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="check a reverser certificate exactly")
    p.add_argument("certificate", help="certificate JSON or file path")
    p.add_argument("--out", help="also write the JSON result to this file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("jordan", help="semisimple + nilpotent decomposition")
    add_common(p, ctx=False)
    p.set_defaults(func=_cmd_jordan)

    p = sub.add_parser("sl2", help="complete a nilpotent element of sp(n) to a triple")
    add_common(p, ctx=False)
    p.set_defaults(func=_cmd_sl2)

    p = sub.add_parser("chains", help="chain data for a nilpotent element of sp(n)")
    add_common(p, ctx=False)
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("reverse", help="reverser for an arbitrary element of sp(n)")
    add_common(p, ctx=False)
    p.set_defaults(func=_cmd_reverse)

    p = sub.add_parser("search", help="brute-force reverser search (evidence only)")
    add_common(p)
    p.add_argument("--height", type=int, default=2, help="coefficient height bound")
    p.add_argument("--involution", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("selftest", help="run the acceptance suites")
    p.add_argument("--criterion", type=int, help="run a single criterion (1-8)")
    p.add_argument("--seed", type=int, help="override the SEED environment variable")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(json.dumps({"error": "ParseError", "message": str(exc)}))
        return 2
    except AdjRealError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
