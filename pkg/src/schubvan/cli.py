"""Command-line interface: ``schubvan <verb> ...``.

Exit codes: 0 success, 1 usage error, 2 refused by a size guard, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from pathlib import Path

from . import acceptance, groebner
from .filters import filter_vanish
from .lifted import coefficient_system, deserialize, serialize
from .purbhoo import DEFAULT_PRIME, DEFAULT_TRIALS, VanishVerdict, vanish_test
from .schubert import coeff_exact, coeff_ps_structure, schubert_poly
from .weyl import LieType, WeylElement, check_element, parse_element

PRIME_ENV = "SCHUBVAN_PRIME"

POLY_LIMIT = 10
EXPAND_LIMIT = 8
PS_LIMIT = 6
EXACT_VANISH_LIMIT = 5
COUNT_VARIABLE_LIMIT = 40
COUNT_SECONDS = 120.0


class UsageError(Exception):
    pass


class Refused(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_prime() -> int:
    text = os.environ.get(PRIME_ENV)
    if not text:
        return DEFAULT_PRIME
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{PRIME_ENV} must be an integer, got {text!r}") from None


def _element(text: str, tag: str) -> WeylElement:
    try:
        return parse_element(text, tag)
    except ValueError as exc:
        raise UsageError(f"bad element {text.strip()!r}: {exc}") from None


def _triple(args) -> tuple[LieType, WeylElement, WeylElement, WeylElement]:
    tag = args.type.upper()
    u, v, w = (_element(s, tag) for s in (args.u, args.v, args.w))
    n = max(x.n for x in (u, v, w))
    lie = LieType(tag, n)
    try:
        u, v, w = (check_element(x, lie) for x in (u, v, w))
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return lie, u, v, w


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _is_json(args, default: str) -> bool:
    return (args.format or default) == "json"


# -- verbs ---------------------------------------------------------------------

def cmd_poly(args) -> int:
    w = _element(args.w, "A")
    if w.trim().n > POLY_LIMIT:
        raise Refused(f"Schubert polynomials are limited to S_{POLY_LIMIT}")
    f = schubert_poly(w)
    if _is_json(args, "text"):
        _emit(args, json.dumps({"w": str(w), "poly": str(f)}) + "\n")
    else:
        _emit(args, f"{f}\n")
    return 0


def cmd_coeff(args) -> int:
    args.type = "A"
    lie, u, v, w = _triple(args)
    if args.method == "ps":
        if lie.n > PS_LIMIT:
            raise Refused(f"the signed sum is limited to n <= {PS_LIMIT}")
        c = coeff_ps_structure(u, v, w, lie.n)
    else:
        if lie.n > EXPAND_LIMIT:
            raise Refused(f"expansion is limited to n <= {EXPAND_LIMIT}")
        c = coeff_exact(u, v, w)
    if _is_json(args, "text"):
        _emit(args, json.dumps({"u": str(u), "v": str(v), "w": str(w), "coefficient": c}) + "\n")
    else:
        _emit(args, f"{c}\n")
    return 0


def vanish_layered(u, v, w, lie: LieType, p: int, trials: int, seed: int) -> VanishVerdict:
    """Filters, then the exact oracle (type A, small n), then the randomized test."""
    if lie.tag == "A":
        cert = filter_vanish(u, v, w)
        if cert is not None:
            return VanishVerdict("ZeroCertified", "filter", 0, None,
                                 {"rule": cert.name, "explain": cert.explain()})
        if lie.n <= EXACT_VANISH_LIMIT:
            c = coeff_exact(u, v, w)
            return VanishVerdict("NonzeroCertified" if c else "ZeroCertified", "exact", 0, None,
                                 {"coefficient": c})
    verdict = vanish_test(u, v, w, lie, p, trials, random.Random(seed))
    verdict.detail["seed"] = seed
    return verdict


def cmd_vanish(args) -> int:
    lie, u, v, w = _triple(args)
    if args.prime <= 2:
        raise UsageError("--prime must be an odd prime")
    verdict = vanish_layered(u, v, w, lie, args.prime, args.trials, args.seed)
    if _is_json(args, "json"):
        _emit(args, verdict.to_json() + "\n")
    else:
        _emit(args, f"{verdict.tag} ({verdict.provenance}) {json.dumps(verdict.detail, sort_keys=True)}\n")
    return 0


def cmd_emit(args) -> int:
    lie, u, v, w = _triple(args)
    system = coefficient_system(u, v, w, lie.tag, args.formulation)
    fmt = "text" if args.format == "text" else "json"
    data = serialize(system, fmt).decode()
    _emit(args, data if data.endswith("\n") else data + "\n")
    return 0


def cmd_count(args) -> int:
    fmt = "text" if args.file.endswith(".txt") else "json"
    try:
        raw = Path(args.file).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        system = deserialize(raw, fmt)
    except ValueError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    if len(system.variables) > COUNT_VARIABLE_LIMIT:
        raise Refused(f"{len(system.variables)} variables; Groebner counting is limited to "
                      f"{COUNT_VARIABLE_LIMIT}")
    try:
        info = groebner.count_system(system, args.prime, args.seed, seconds=COUNT_SECONDS)
    except (groebner.GroebnerBudgetExceeded, ValueError) as exc:
        raise Refused(str(exc)) from None
    _emit(args, json.dumps(info.to_dict()) + "\n")
    return 0


def cmd_selftest(args) -> int:
    results = []
    for number in (sorted(acceptance.CRITERIA) if args.level >= 2 else acceptance.LEVEL_ONE):
        res = acceptance.run_criterion(number)
        print(res.line(), flush=True)
        results.append(res)
    return 0 if all(r.ok for r in results) else 3


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--prime", type=int, default=None,
                        help=f"prime field; default 2^31-1 for vanish, 32003 for count, or ${PRIME_ENV}")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="randomized trials")
    common.add_argument("--type", default="A", choices=list("ABCDabcd"), help="Lie type")
    common.add_argument("--format", choices=["json", "text"], default=None)
    common.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")

    parser = _Parser(prog="schubvan", description="Schubert polynomials, coefficients and vanishing.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", parents=[common], help="print the Schubert polynomial of w")
    p.add_argument("w")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("coeff", parents=[common], help="Schubert coefficient c^w_{u,v}")
    p.add_argument("u"), p.add_argument("v"), p.add_argument("w")
    p.add_argument("--method", choices=["expand", "ps"], default="expand")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("vanish", parents=[common], help="decide whether c^w_{u,v} vanishes")
    p.add_argument("u"), p.add_argument("v"), p.add_argument("w")
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("emit", parents=[common], help="write the lifted system for c^w_{u,v}")
    p.add_argument("u"), p.add_argument("v"), p.add_argument("w")
    p.add_argument("--formulation", choices=["cell", "borel"], default="cell")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("count", parents=[common], help="count solutions of a lifted system file")
    p.add_argument("file")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    p.add_argument("--level", type=int, choices=[1, 2], default=1)
    p.set_defaults(func=cmd_selftest)
    return parser


_NEGATIVE_WINDOW = re.compile(r"^-\d[-\d,]*$")


def _protect_negatives(argv: list[str]) -> list[str]:
    # signed windows such as "-2,1" would otherwise be read as options
    return [" " + a if _NEGATIVE_WINDOW.match(a) else a for a in argv]


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_protect_negatives(argv))
        if args.prime is None:
            args.prime = groebner.DEFAULT_GB_PRIME if args.verb == "count" else _default_prime()
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except Refused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, RuntimeError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
