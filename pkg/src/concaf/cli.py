"""Command-line interface and the seeded random-instance generator.

Exit codes are a frozen contract:

    0   success (including the verdict "concurrent")
    1   usage, parse, or capacity errors
    2   engine disagreement or witness verification failure
    3   tautological clause in a reduction input
    4   verify-reduction check failure
    5   fuzz invariant violation
    10  verdict "not-concurrent"

Machine-readable mode (``--machine``) prints stable line-oriented records:
``claimset <labels...>``, ``verdict <word>``, ``witness <e|g> <names...>``,
``claims <e|g> <labels...>``, ``size <args> <attacks>``,
``check <name> <pass|fail>``, ``fuzz <seed> <count> <failures>``.

The environment variable CAF_MAX_ARGS overrides the default enumeration cap
wherever ``--max-args`` is not given explicitly.
"""

import argparse
import os
import random
import sys
from typing import Iterable, Optional, Sequence

from .caf_io import emit_caf, parse_caf
from .cnf import CnfFormula, make_cnf, parse_dimacs, DEFAULT_ORACLE_MAX_VARS
from .errors import (
    CapacityError,
    ConcafError,
    ParseError,
    StructuralError,
    TautologyError,
    WitnessVerificationError,
)
from .model import Caf, make_caf
from .reduction import reduce_unsat, verify_reduction
from .satcheck import is_concurrent_sat, verify_witness
from .semantics import (
    DEFAULT_MAX_ARGS,
    claim_level_naive,
    claim_level_naive_exhaustive,
    inherited_naive,
    is_concurrent_brute,
    is_incomparable,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INTERNAL = 2
EXIT_TAUTOLOGY = 3
EXIT_VERIFY_FAILED = 4
EXIT_FUZZ_FAILED = 5
EXIT_NOT_CONCURRENT = 10


def random_caf(rng: random.Random, max_args: int = 10, max_claims: int = 6) -> Caf:
    """Random framework drawn entirely from ``rng``.

    The generator is Python's Mersenne Twister, so a seed pins the instance
    on every platform; the draw order below is part of that contract. Attack
    density (self-attacks at a quarter of it) and the claim pool size are
    themselves drawn per instance.
    """
    n = rng.randint(0, max_args)
    density = rng.uniform(0.05, 0.6)
    attacks = [
        (a, b) for a in range(n) for b in range(n) if a != b and rng.random() < density
    ]
    attacks += [(a, a) for a in range(n) if rng.random() < density / 4]
    pool = rng.randint(1, max_claims)
    labels = [f"k{rng.randrange(pool)}" for _ in range(n)]
    return make_caf([f"a{i}" for i in range(n)], attacks, labels)


def random_cnf(rng: random.Random, max_vars: int = 4, max_clauses: int = 6) -> CnfFormula:
    """Random non-tautological CNF; clause variables are drawn distinct."""
    n_vars = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        size = rng.randint(1, min(3, n_vars))
        chosen = rng.sample(range(1, n_vars + 1), size)
        clauses.append([v if rng.random() < 0.5 else -v for v in chosen])
    return make_cnf(n_vars, clauses)


def _instance_rng(seed: int, index: int) -> random.Random:
    # Seeding with the string "<seed>:<index>" makes every instance a pure
    # function of (seed, index); replaying a seed with count > index hits
    # the identical instance.
    return random.Random(f"{seed}:{index}")


def _fmt_set(items: Iterable[str]) -> str:
    return "{" + ",".join(items) + "}"


def _claim_labels(caf: Caf, claim_set) -> tuple[str, ...]:
    return caf.claim_labels(claim_set)


def _arg_names(caf: Caf, extension) -> tuple[str, ...]:
    return tuple(caf.arg_names[a] for a in sorted(extension))


def _read(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def _load_caf(path: str) -> Caf:
    return parse_caf(_read(path))


def _cmd_extensions(args: argparse.Namespace) -> int:
    caf = _load_caf(args.path)
    if args.mode == "inherited":
        family = inherited_naive(caf, args.max_args)
    else:
        family = claim_level_naive(caf, args.max_args)
    for claim_set in family:
        labels = _claim_labels(caf, claim_set)
        if args.machine:
            print(" ".join(("claimset",) + labels))
        else:
            print(_fmt_set(labels))
    return EXIT_OK


def _cmd_concurrence(args: argparse.Namespace) -> int:
    caf = _load_caf(args.path)
    engine = args.engine
    if engine == "auto":
        engine = "both" if caf.n_args <= args.max_args else "sat"
    verdicts = {}
    if engine in ("brute", "both"):
        verdicts["brute"] = is_concurrent_brute(caf, args.max_args)
    if engine in ("sat", "both"):
        verdicts["sat"] = is_concurrent_sat(caf)
    if len(verdicts) == 2 and verdicts["brute"].concurrent != verdicts["sat"].concurrent:
        print(
            "engine disagreement: brute says "
            f"{'concurrent' if verdicts['brute'].concurrent else 'not-concurrent'}, "
            f"sat says {'concurrent' if verdicts['sat'].concurrent else 'not-concurrent'}",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    verdict = verdicts["brute"] if "brute" in verdicts else verdicts["sat"]
    if verdict.concurrent:
        print("verdict concurrent" if args.machine else "concurrent")
        return EXIT_OK
    e, g = verdict.witness
    if args.machine:
        print("verdict not-concurrent")
        if args.witness:
            print(" ".join(("witness", "e") + _arg_names(caf, e)))
            print(" ".join(("witness", "g") + _arg_names(caf, g)))
            print(" ".join(("claims", "e") + _claim_labels(caf, caf.claim_set(e))))
            print(" ".join(("claims", "g") + _claim_labels(caf, caf.claim_set(g))))
    else:
        print("not-concurrent")
        print(
            f"E = {_fmt_set(_arg_names(caf, e))}"
            f"  claims {_fmt_set(_claim_labels(caf, caf.claim_set(e)))}"
        )
        print(
            f"G = {_fmt_set(_arg_names(caf, g))}"
            f"  claims {_fmt_set(_claim_labels(caf, caf.claim_set(g)))}"
        )
    return EXIT_NOT_CONCURRENT


def _cmd_reduce(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read(args.cnf_path))
    art = reduce_unsat(formula)
    document = emit_caf(art.caf)
    summary_stream = sys.stdout
    if args.out_path == "-":
        sys.stdout.write(document)
        summary_stream = sys.stderr
    else:
        with open(args.out_path, "w", encoding="utf-8") as handle:
            handle.write(document)
    n_args, n_attacks = art.caf.n_args, len(art.caf.af.attacks)
    if args.machine:
        print(f"size {n_args} {n_attacks}", file=summary_stream)
    else:
        print(f"{n_args} arguments, {n_attacks} attacks", file=summary_stream)
    return EXIT_OK


def _cmd_verify_reduction(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read(args.cnf_path))
    art = reduce_unsat(formula)
    report = verify_reduction(
        art, formula, oracle_max_vars=args.max_vars, max_args=args.max_args
    )
    for check in report.checks:
        word = "pass" if check.passed else "fail"
        if args.machine:
            print(f"check {check.name} {word}")
        elif check.passed or not check.detail:
            print(f"{check.name}: {word}")
        else:
            print(f"{check.name}: {word} ({check.detail})")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _check_fuzz_instance(caf: Caf, max_args: int = 10) -> Optional[str]:
    """Name of the first violated cross-engine invariant, or None."""
    inherited = inherited_naive(caf, max_args)
    filtered = set(claim_level_naive(caf, max_args))
    exhaustive = set(claim_level_naive_exhaustive(caf, max(max_args, 16)))
    if filtered != exhaustive:
        return "claim-level-filter-vs-exhaustive"
    if not exhaustive <= set(inherited):
        return "claim-level-inclusion"
    families_equal = exhaustive == set(inherited)
    if is_incomparable(inherited) != families_equal:
        return "incomparability-equivalence"
    brute = is_concurrent_brute(caf, max_args)
    sat = is_concurrent_sat(caf)
    if brute.concurrent != sat.concurrent:
        return "engine-agreement"
    if brute.concurrent != families_equal:
        return "verdict-vs-families"
    if not brute.concurrent:
        verify_witness(caf, *brute.witness)
        verify_witness(caf, *sat.witness)
    return None


def _cmd_fuzz(args: argparse.Namespace) -> int:
    for index in range(args.count):
        rng = _instance_rng(args.seed, index)
        caf = random_caf(rng, args.max_args, args.max_claims)
        try:
            violated = _check_fuzz_instance(caf, args.max_args)
        except WitnessVerificationError as exc:
            violated = f"witness-verification ({exc})"
        if violated:
            print(f"instance {index}: invariant {violated} violated", file=sys.stderr)
            print(
                "reproduce: concaf fuzz"
                f" --seed {args.seed} --count {index + 1}"
                f" --max-args {args.max_args} --max-claims {args.max_claims}",
                file=sys.stderr,
            )
            return EXIT_FUZZ_FAILED
    if args.machine:
        print(f"fuzz {args.seed} {args.count} 0")
    else:
        print(f"fuzz: {args.count} instances ok (seed {args.seed})")
    return EXIT_OK


def _default_max_args() -> int:
    raw = os.environ.get("CAF_MAX_ARGS")
    if raw is None:
        return DEFAULT_MAX_ARGS
    try:
        cap = int(raw)
    except ValueError:
        raise StructuralError(f"CAF_MAX_ARGS must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise StructuralError("CAF_MAX_ARGS must be positive")
    return cap


def _build_parser(default_max_args: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concaf",
        description="Decide concurrence of naive claim semantics on "
        "claim-augmented argumentation frameworks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_machine(p: argparse.ArgumentParser) -> None:
        p.add_argument("--machine", action="store_true", help="stable line-oriented output")

    def add_cap(p: argparse.ArgumentParser, default: int) -> None:
        p.add_argument(
            "--max-args",
            type=int,
            default=default,
            metavar="N",
            help=f"enumeration cap (default {default}; env CAF_MAX_ARGS)",
        )

    p = sub.add_parser("extensions", help="list claim sets under one semantics variant")
    p.add_argument("path", help="framework document")
    p.add_argument(
        "--mode", choices=("inherited", "claim-level"), default="inherited"
    )
    add_machine(p)
    add_cap(p, default_max_args)
    p.set_defaults(func=_cmd_extensions)

    p = sub.add_parser("concurrence", help="decide whether the two variants coincide")
    p.add_argument("path", help="framework document")
    p.add_argument(
        "--engine",
        choices=("brute", "sat", "both", "auto"),
        default="auto",
        help="auto = both within the cap, sat above it",
    )
    p.add_argument(
        "--witness",
        action="store_true",
        help="with --machine, also print the witness records",
    )
    add_machine(p)
    add_cap(p, default_max_args)
    p.set_defaults(func=_cmd_concurrence)

    p = sub.add_parser("reduce", help="turn a DIMACS CNF into a framework document")
    p.add_argument("cnf_path", help="DIMACS CNF input")
    p.add_argument("out_path", help="output document path, or - for stdout")
    add_machine(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser(
        "verify-reduction", help="reduce a CNF and check the construction's contract"
    )
    p.add_argument("cnf_path", help="DIMACS CNF input")
    p.add_argument(
        "--max-vars",
        type=int,
        default=DEFAULT_ORACLE_MAX_VARS,
        metavar="N",
        help=f"oracle cap (default {DEFAULT_ORACLE_MAX_VARS})",
    )
    add_machine(p)
    add_cap(p, default_max_args)
    p.set_defaults(func=_cmd_verify_reduction)

    p = sub.add_parser("fuzz", help="random frameworks through the invariant suite")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--count", type=int, default=100, help="instances (default 100)")
    p.add_argument("--max-claims", type=int, default=6, metavar="N")
    add_machine(p)
    p.add_argument(
        "--max-args",
        type=int,
        default=10,
        metavar="N",
        help="generated instance size cap (default 10)",
    )
    p.set_defaults(func=_cmd_fuzz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = _build_parser(_default_max_args())
    except StructuralError as exc:
        print(f"concaf: {exc}", file=sys.stderr)
        return EXIT_ERROR
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TautologyError as exc:
        print(f"concaf: {exc}", file=sys.stderr)
        return EXIT_TAUTOLOGY
    except WitnessVerificationError as exc:
        print(f"concaf: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ParseError, CapacityError, StructuralError) as exc:
        print(f"concaf: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ConcafError as exc:
        print(f"concaf: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"concaf: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
