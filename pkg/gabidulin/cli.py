"""
Command Line Interface

Subcommands: encode, corrupt, decode, selftest and bench. Elements are decimal
integers (sum of coordinates times q^i); messages are coefficient lists by
ascending q-degree. Results go to stdout, logs to stderr.

Exit codes: 0 success, 1 self-test mismatch, 2 usage or parse error,
3 invariant violation, 4 internal guard.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from .config import get_settings
from .service import GUARD, INVARIANT, USAGE, DecodingService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_CODES = {USAGE: 2, INVARIANT: 3, GUARD: 4}


def _int_list(text: str) -> List[int]:
    """Parse '8,16,32' (or a single number)."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gabidulin",
        description="Gabidulin code encoder and minimal list decoder",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    encode = sub.add_parser("encode", help="encode message coefficients")
    encode.add_argument("spec", help="code specification JSON file")
    encode.add_argument("coeffs", nargs="+", type=int, help="message coefficients a0 a1 ...")

    corrupt = sub.add_parser("corrupt", help="add a random rank-t error")
    corrupt.add_argument("spec")
    corrupt.add_argument("word", nargs="+", type=int)
    corrupt.add_argument("-t", "--rank", type=int, required=True, help="error rank")
    corrupt.add_argument("--seed", type=int, default=0)

    decode = sub.add_parser("decode", help="list-decode a received word")
    decode.add_argument("spec")
    decode.add_argument("word", nargs="+", type=int)
    decode.add_argument("--basis", choices=["eea", "iter", "iterative"], default="eea")
    decode.add_argument("--json", action="store_true", help="print a JSON report")
    decode.add_argument("--workers", type=int, default=None)

    selftest = sub.add_parser("selftest", help="check the worked GF(8) example bit-exactly")
    selftest.add_argument("--modulus", nargs="+", type=int, default=None,
                          help="replacement modulus, ascending coefficients")

    bench = sub.add_parser("bench", help="compare decoders by field-multiplication count")
    bench.add_argument("--n-list", type=_int_list, required=True, help="code lengths, e.g. 4,8")
    bench.add_argument("--t", type=int, required=True, help="error rank")
    bench.add_argument("--trials", type=int, default=5)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--m", type=int, default=None, help="extension degree (default n)")
    bench.add_argument("--k", type=int, default=None, help="dimension (default n // 2)")
    return parser


def _fail(result: Dict[str, Any]) -> int:
    print(f"error: {result['error']}", file=sys.stderr)
    return EXIT_CODES.get(result.get("error_kind"), EXIT_CODES[USAGE])


def _print_selftest(result: Dict[str, Any]) -> None:
    for check in result["checks"]:
        if check["passed"]:
            print(f"PASS {check['name']}")
        else:
            print(f"FAIL {check['name']}")
            print(f"  expected: {json.dumps(check['expected'])}")
            print(f"  actual:   {json.dumps(check['actual'])}")
    print(f"{'passed' if result['passed'] else 'FAILED'} in {result['elapsed_s']:.3f} s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid GABIDULIN_* setting: {e}", file=sys.stderr)
        return EXIT_CODES[USAGE]
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    service = DecodingService()

    if args.command == "encode":
        result = service.encode(args.spec, args.coeffs)
        if "error" in result:
            return _fail(result)
        print(" ".join(str(a) for a in result["word"]))

    elif args.command == "corrupt":
        result = service.corrupt(args.spec, args.word, args.rank, args.seed)
        if "error" in result:
            return _fail(result)
        print(" ".join(str(a) for a in result["word"]))

    elif args.command == "decode":
        result = service.decode(args.spec, args.word, basis=args.basis, workers=args.workers)
        if "error" in result:
            return _fail(result)
        if args.json:
            print(json.dumps(result, indent=2))
        else:
            for message in result["messages"]:
                print(" ".join(str(a) for a in message))

    elif args.command == "selftest":
        result = service.selftest(args.modulus)
        if "error" in result:
            return _fail(result)
        _print_selftest(result)
        if not result["passed"]:
            return EXIT_SELFTEST_FAILED

    elif args.command == "bench":
        result = service.bench(args.n_list, args.t, args.trials, args.seed, m=args.m, k=args.k)
        if "error" in result:
            return _fail(result)
        sys.stdout.write(result["csv"])

    return EXIT_OK
