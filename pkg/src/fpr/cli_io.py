"""Profile file format, result documents, and the command-line surface.

Profile text format (strict):

    m
    1<TAB>name_1
    ...
    m<TAB>name_m
    n n_distinct
    count: i_1,i_2,...,i_m       (one line per distinct vote)

Vote lines use 1-based candidate indices, best first; consecutive
identical votes are run-length encoded and voter order is significant
(it is the candidate single-crossing witness order).  Result documents
are JSON with a stable key order and no volatile fields, so identical
inputs and flags produce byte-identical output.

Exit codes: 0 success, 2 domain violation, 3 parse error, 4 budget or
size limit, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterable
from pathlib import Path

from .core import (
    Aggregator,
    Dissatisfaction,
    DomainViolationError,
    Election,
    InvalidInputError,
    ParseError,
    Rule,
    SizeLimitError,
    SolveResult,
    contiguity_report,
    score,
)
from .cc_solver import solve_cc, solve_cc_width
from .domains import (
    ClonePartition,
    check_narcissistic,
    check_single_crossing,
    find_single_crossing_order,
    find_single_peaked_axis_bruteforce,
)
from .instances import (
    gen_example_narcissistic_util,
    gen_example_sc_gap,
    gen_example_sp,
    gen_random_sc_narcissistic,
    gen_random_single_crossing,
)
from .monroe_solver import solve_monroe_egalitarian_sc_narcissistic
from .oracle import (
    best_contiguous_bruteforce,
    solve_cc_bruteforce,
    solve_monroe_bruteforce,
)
from .reduction import build_monroe_reduction


def parse_profile(source) -> Election:
    """Read a profile from a path, a file object, or an iterable of
    lines.  Raises ParseError with a 1-based line number on any
    malformed content."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    elif hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        lines = [str(x).rstrip("\n") for x in source]

    pos = 0

    def take(what: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of file, expected {what}", pos + 1)
        pos += 1
        return lines[pos - 1]

    def intval(tok: str, what: str, line: int) -> int:
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"bad {what} {tok!r}", line) from None

    m = intval(take("candidate count").strip(), "candidate count", 1)
    if m < 1:
        raise ParseError(f"candidate count must be positive, got {m}", 1)
    names = []
    for idx in range(1, m + 1):
        line = take(f"candidate line {idx}")
        left, sep, name = line.partition("\t")
        if not sep or not name:
            raise ParseError("expected 'index<TAB>name'", pos)
        if intval(left.strip(), "candidate index", pos) != idx:
            raise ParseError(f"candidate index {left.strip()} out of order, expected {idx}", pos)
        names.append(name)

    header = take("voter header").split()
    if len(header) != 2:
        raise ParseError("expected 'n n_distinct'", pos)
    hline = pos
    n = intval(header[0], "voter count", hline)
    distinct = intval(header[1], "distinct vote count", hline)
    if n < 1 or distinct < 1 or distinct > n:
        raise ParseError(f"bad voter header {n} {distinct}", hline)

    votes: list[tuple[int, ...]] = []
    for _ in range(distinct):
        line = take("vote line")
        left, sep, right = line.partition(":")
        if not sep:
            raise ParseError("expected 'count: i_1,...,i_m'", pos)
        count = intval(left.strip(), "vote multiplicity", pos)
        if count < 1:
            raise ParseError(f"vote multiplicity must be positive, got {count}", pos)
        toks = right.split(",")
        if len(toks) != m:
            raise ParseError(f"vote has {len(toks)} entries, expected {m}", pos)
        vote = tuple(intval(t.strip(), "candidate index", pos) - 1 for t in toks)
        if sorted(vote) != list(range(m)):
            raise ParseError("vote is not a permutation of 1..m", pos)
        votes.extend([vote] * count)
    if len(votes) != n:
        raise ParseError(f"vote multiplicities sum to {len(votes)}, header says {n}", pos)
    while pos < len(lines):
        if lines[pos].strip():
            raise ParseError(f"unexpected trailing content {lines[pos]!r}", pos + 1)
        pos += 1
    return Election.from_votes(votes, names=names)


def serialize_profile(election: Election) -> str:
    """Canonical text form; inverse of parse_profile up to run-length
    normalization."""
    for name in election.names:
        if "\t" in name or "\n" in name:
            raise InvalidInputError(f"candidate name {name!r} not serializable")
    runs: list[tuple[int, tuple[int, ...]]] = []
    for vote in election.rankings:
        if runs and runs[-1][1] == vote:
            runs[-1] = (runs[-1][0] + 1, vote)
        else:
            runs.append((1, vote))
    out = [str(election.m)]
    out.extend(f"{i}\t{name}" for i, name in enumerate(election.names, start=1))
    out.append(f"{election.n} {len(runs)}")
    out.extend(f"{count}: " + ",".join(str(c + 1) for c in vote)
               for count, vote in runs)
    return "\n".join(out) + "\n"


def result_document(result: SolveResult, k: int,
                    alpha: Dissatisfaction | None = None) -> dict:
    """JSON-ready report with stable key order; re-validates the
    objective before reporting and drops volatile diagnostics."""
    election = result.election
    if alpha is None:
        alpha = _alpha_from_label(result.alpha_label, election.m)
    objective = score(election, result.assignment, alpha, result.aggregator)
    assert objective == result.objective, "reported objective failed re-validation"
    creport = contiguity_report(election, result.assignment)
    diagnostics = {key: value for key, value in sorted(result.diagnostics.items())
                   if key != "elapsed_s"}
    if "table_shape" in diagnostics:
        diagnostics["table_shape"] = list(diagnostics["table_shape"])
    return {
        "rule": result.rule.name.lower(),
        "aggregator": result.aggregator.name.lower(),
        "alpha": result.alpha_label,
        "k": k,
        "objective": result.objective,
        "committee": [election.names[c] for c in sorted(result.committee)],
        "representatives": [election.names[c] for c in result.assignment.rep_of],
        "contiguous": creport.ok,
        "blocks": [
            {"candidate": election.names[b.candidate],
             "first_voter": b.first_voter + 1,
             "last_voter": b.last_voter + 1}
            for b in creport.blocks
        ],
        "diagnostics": diagnostics,
    }


def _alpha_from_label(label: str, m: int) -> Dissatisfaction:
    if label == "borda":
        return Dissatisfaction.borda(m)
    if label.startswith("tapprox:"):
        return Dissatisfaction.t_approval(int(label.split(":", 1)[1]), m)
    raise InvalidInputError(f"cannot rebuild dissatisfaction from label {label!r}")


def _parse_alpha(spec: str, m: int) -> Dissatisfaction:
    if spec == "borda":
        return Dissatisfaction.borda(m)
    if spec.startswith("tapprox:"):
        tok = spec.split(":", 1)[1]
        try:
            t = int(tok)
        except ValueError:
            raise InvalidInputError(f"bad approval threshold {tok!r}") from None
        return Dissatisfaction.t_approval(t, m)
    if spec.startswith("custom:"):
        path = spec.split(":", 1)[1]
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read dissatisfaction file: {exc}", 1) from None
        toks = text.replace(",", " ").split()
        try:
            values = tuple(int(t) for t in toks)
        except ValueError:
            raise ParseError(f"non-integer entry in {path}", 1) from None
        return Dissatisfaction.custom(values)
    raise InvalidInputError(
        f"unknown dissatisfaction spec {spec!r} (use borda, tapprox:T, custom:FILE)"
    )


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract reserves 2 for domain
    # violations and wants 64 for usage problems.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(64)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fpr", description=__doc__.splitlines()[0])
    # parser_class so bad subcommand flags also exit 64, not argparse's 2
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a generated profile to stdout")
    gen.add_argument("generator", choices=[
        "example1", "example2", "example3", "random-sc", "random-sc-narcissistic",
    ])
    gen.add_argument("--m", type=int, default=3)
    gen.add_argument("--n", type=int, default=4)
    gen.add_argument("--seed", type=int, default=0)

    def io_flags(p):
        p.add_argument("--in", dest="infile", default=None,
                       help="profile path (default: stdin)")

    def solver_flags(p):
        io_flags(p)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--alpha", required=True,
                       help="borda | tapprox:T | custom:FILE")
        p.add_argument("--agg", choices=["sum", "max"], required=True)
        p.add_argument("--auto-order", action="store_true",
                       help="search for a single-crossing voter order first")

    scc = sub.add_parser("solve-cc", help="exact CC on single-crossing input")
    solver_flags(scc)
    scc.add_argument("--width-partition", default=None,
                     help="JSON file: list of lists of 1-based candidate indices")

    smo = sub.add_parser("solve-monroe", help="exact egalitarian Monroe on "
                         "single-crossing narcissistic input")
    solver_flags(smo)
    smo.add_argument("--oracle", action="store_true",
                     help="force brute-force enumeration (any aggregator)")

    chk = sub.add_parser("check-domain", help="report domain memberships")
    io_flags(chk)
    chk.add_argument("--axis-limit", type=int, default=8,
                     help="skip single-peaked search above this many candidates")

    orc = sub.add_parser("oracle", help="brute-force reference solvers")
    solver_flags(orc)
    orc.add_argument("--rule", choices=["cc", "monroe"], required=True)
    orc.add_argument("--contiguous", action="store_true",
                     help="restrict to contiguous voter blocks")
    orc.add_argument("--budget", type=int, default=None)

    red = sub.add_parser("reduce", help="embed the input into a single-crossing "
                         "Monroe instance")
    io_flags(red)
    red.add_argument("--k", type=int, required=True)
    red.add_argument("--groups-out", default=None,
                     help="write the group/voter-list sidecar JSON here")

    sub.add_parser("verify", help="run the acceptance suite")
    return parser


def _read_election(args) -> Election:
    if args.infile is None:
        return parse_profile(sys.stdin)
    return parse_profile(args.infile)


def _maybe_reorder(election: Election, args) -> Election:
    if not getattr(args, "auto_order", False):
        return election
    order = find_single_crossing_order(election)
    if order is None:
        raise DomainViolationError("no single-crossing voter order exists")
    return election.reorder_voters(order)


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _cmd_gen(args) -> int:
    if args.generator == "example1":
        election = gen_example_sc_gap(args.m, args.n)
    elif args.generator == "example2":
        election = gen_example_narcissistic_util()
    elif args.generator == "example3":
        election = gen_example_sp(args.m)
    elif args.generator == "random-sc":
        election = gen_random_single_crossing(args.m, args.n, args.seed)
    else:
        election = gen_random_sc_narcissistic(args.m, args.n, args.seed)
    sys.stdout.write(serialize_profile(election))
    return 0


def _cmd_solve_cc(args) -> int:
    election = _maybe_reorder(_read_election(args), args)
    alpha = _parse_alpha(args.alpha, election.m)
    agg = Aggregator[args.agg.upper()]
    if args.width_partition is not None:
        try:
            raw = json.loads(Path(args.width_partition).read_text(encoding="utf-8"))
            sets = tuple(tuple(sorted(int(x) - 1 for x in s)) for s in raw)
        except (OSError, ValueError) as exc:
            raise ParseError(f"bad width partition file: {exc}", 1) from None
        result = solve_cc_width(election, ClonePartition(sets), args.k, alpha, agg)
    else:
        result = solve_cc(election, args.k, alpha, agg)
    _emit(result_document(result, args.k, alpha))
    return 0


def _cmd_solve_monroe(args) -> int:
    election = _maybe_reorder(_read_election(args), args)
    alpha = _parse_alpha(args.alpha, election.m)
    agg = Aggregator[args.agg.upper()]
    if args.oracle:
        result = solve_monroe_bruteforce(election, args.k, alpha, agg)
    elif agg is Aggregator.MAX:
        result = solve_monroe_egalitarian_sc_narcissistic(election, args.k, alpha)
    else:
        raise InvalidInputError(
            "the Monroe dynamic program handles --agg max only; "
            "pass --oracle for other aggregators"
        )
    _emit(result_document(result, args.k, alpha))
    return 0


def _cmd_check_domain(args) -> int:
    election = _read_election(args)
    order = find_single_crossing_order(election)
    axis = None
    checked = election.m <= args.axis_limit
    if checked:
        axis = find_single_peaked_axis_bruteforce(election, max_m=args.axis_limit)
    _emit({
        "m": election.m,
        "n": election.n,
        "single_crossing": check_single_crossing(election),
        "witness_voter_order": None if order is None else [v + 1 for v in order],
        "narcissistic": check_narcissistic(election),
        "single_peaked_checked": checked,
        "single_peaked_axis": None if axis is None
        else [election.names[c] for c in axis],
    })
    return 0


def _cmd_oracle(args) -> int:
    election = _maybe_reorder(_read_election(args), args)
    alpha = _parse_alpha(args.alpha, election.m)
    agg = Aggregator[args.agg.upper()]
    rule = Rule[args.rule.upper()]
    if args.contiguous:
        result = best_contiguous_bruteforce(election, args.k, alpha, agg, rule,
                                            budget=args.budget)
    elif rule is Rule.CC:
        result = solve_cc_bruteforce(election, args.k, alpha, agg,
                                     budget=args.budget)
    else:
        result = solve_monroe_bruteforce(election, args.k, alpha, agg,
                                         budget=args.budget)
    _emit(result_document(result, args.k, alpha))
    return 0


def _cmd_reduce(args) -> int:
    election = _read_election(args)
    out = build_monroe_reduction(election, args.k)
    sys.stdout.write(serialize_profile(out.sc_election))
    if args.groups_out is not None:
        sidecar = {
            "k_sc": out.k_sc,
            "candidate_group": list(out.candidate_group),
            "voter_list": list(out.voter_list),
            "embedded_candidates": [c + 1 for c in out.cprime_ids],
        }
        Path(args.groups_out).write_text(json.dumps(sidecar, indent=2) + "\n",
                                         encoding="utf-8")
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_all

    rows = run_all()
    failures = 0
    for name, passed, detail, elapsed in rows:
        flag = "PASS" if passed else "FAIL"
        failures += not passed
        print(f"{flag} {name}: {detail} [{elapsed:.1f}s]")
    print(f"{len(rows) - failures}/{len(rows)} criteria passed")
    return 0 if failures == 0 else 1


def run_cli(argv: list[str] | None = None) -> int:
    threads = os.environ.get("FPR_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            sys.stderr.write(f"fpr: FPR_THREADS must be a positive integer, "
                             f"got {threads!r}\n")
            return 64
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "gen": _cmd_gen,
        "solve-cc": _cmd_solve_cc,
        "solve-monroe": _cmd_solve_monroe,
        "check-domain": _cmd_check_domain,
        "oracle": _cmd_oracle,
        "reduce": _cmd_reduce,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except DomainViolationError as exc:
        sys.stderr.write(f"fpr: domain violation: {exc}\n")
        return 2
    except ParseError as exc:
        sys.stderr.write(f"fpr: {exc}\n")
        return 3
    except SizeLimitError as exc:
        sys.stderr.write(f"fpr: size limit: {exc}\n")
        return 4
    except InvalidInputError as exc:
        sys.stderr.write(f"fpr: invalid input: {exc}\n")
        return 64


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
