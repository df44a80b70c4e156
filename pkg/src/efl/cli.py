"""Command line: ``efl <subcommand> ...``.

Exit codes: 0 success, 1 bad input, 2 procedure stuck, 3 improper coloring
(or failed verification), 4 oracle cap exceeded.  Failure paths write only to
stderr.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .colorer import Improper, Stuck, Success, outcome_kind, run_procedure
from .instance import ParseError, parse_instance, validate
from .latin import cyclic_symmetric_latin
from .systems import DEFAULT_ENUMERATION_CAP, build_hn, enumerate_systems, random_system, realize
from .verify import (
    DEFAULT_VERTEX_CAP,
    CapExceeded,
    chromatic_number,
    format_chi,
    format_coloring,
    parse_coloring,
    verify_coloring,
)

EXIT_OK, EXIT_INPUT, EXIT_STUCK, EXIT_IMPROPER, EXIT_CAP = 0, 1, 2, 3, 4
KINDS = ("success", "stuck_s2", "stuck_s6", "improper")


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text)


def _load_instance(path: str):
    try:
        inst = parse_instance(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    problems = validate(inst)
    if problems:
        raise InputError(f"{path}: invalid instance: " + "; ".join(map(str, problems)))
    return inst


def cmd_gen_hn(args) -> int:
    _write(args.out, build_hn(args.n).to_text())
    return EXIT_OK


def cmd_latin(args) -> int:
    _write(args.out, cyclic_symmetric_latin(args.n).to_text())
    return EXIT_OK


def cmd_color(args) -> int:
    inst = _load_instance(args.inp)
    outcome = run_procedure(inst)
    if args.trace:
        sys.stderr.write("".join(f"{ev}\n" for ev in outcome.trace))
    if isinstance(outcome, Success):
        _write(args.out, format_coloring(inst.n, outcome.coloring))
        return EXIT_OK
    if isinstance(outcome, Stuck):
        print(f"STUCK {outcome.step} {outcome.context}", file=sys.stderr)
        return EXIT_STUCK
    for v in outcome.violations:
        print(v, file=sys.stderr)
    for x, cells in outcome.label_conflicts:
        print("CONFLICT label=" + ",".join(map(str, x)), file=sys.stderr)
    return EXIT_IMPROPER


def cmd_verify(args) -> int:
    inst = _load_instance(args.inp)
    try:
        _, coloring = parse_coloring(_read(args.coloring))
    except ParseError as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    violations = verify_coloring(inst, coloring)
    for v in violations:
        print(v, file=sys.stderr)
    return EXIT_IMPROPER if violations else EXIT_OK


def cmd_oracle(args) -> int:
    chi = chromatic_number(_load_instance(args.inp), args.cap)
    if isinstance(chi, CapExceeded):
        print(format_chi(chi), file=sys.stderr)
        return EXIT_CAP
    _write("-", format_chi(chi) + "\n")
    return EXIT_OK


def _evaluate(item):
    name, system = item
    inst = realize(system)
    outcome = run_procedure(inst)
    trace = "".join(f"{ev}\n" for ev in outcome.trace)
    return name, outcome_kind(outcome), inst.to_text(), trace


def _run_batch(items, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate, items, chunksize=16))
    return [_evaluate(it) for it in items]


def _report(header: str, results, witness_dir: str | None) -> tuple[str, int]:
    counts = dict.fromkeys(KINDS, 0)
    witnesses = []
    if witness_dir:
        Path(witness_dir).mkdir(parents=True, exist_ok=True)
    for name, kind, inst_text, trace in results:
        counts[kind] += 1
        if kind == "success":
            continue
        base = f"{name}_{kind}"
        if witness_dir:
            path = Path(witness_dir) / f"{base}.efl"
            path.write_text(inst_text)
            path.with_suffix(".trace").write_text(trace)
            witnesses.append(str(path))
        else:
            witnesses.append(base)
    lines = [header, " ".join(f"{k}={counts[k]}" for k in KINDS)]
    lines += [f"witness {w}" for w in witnesses]
    return "\n".join(lines) + "\n", EXIT_IMPROPER if counts["improper"] else EXIT_OK


def cmd_hunt(args) -> int:
    seeds = [args.seed + k for k in range(args.count)]
    systems = [random_system(args.n, args.p, args.q, s) for s in seeds]
    if args.dump_systems:
        _write(args.dump_systems, "".join(s.to_text() for s in systems))
    items = [(f"n{args.n}_seed{s}", sys_) for s, sys_ in zip(seeds, systems)]
    header = f"HUNT n={args.n} count={args.count} p={args.p} q={args.q} seed={args.seed}"
    text, code = _report(header, _run_batch(items, args.jobs), args.witness_dir)
    _write(args.out, text)
    return code


def cmd_enumerate(args) -> int:
    try:
        systems = list(enumerate_systems(args.n, cap=args.cap))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    items = [(f"n{args.n}_sys{k}", s) for k, s in enumerate(systems)]
    header = f"ENUMERATE n={args.n} count={len(systems)}"
    text, code = _report(header, _run_batch(items, args.jobs), args.witness_dir)
    _write(args.out, text)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="efl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-hn", help="write the instance H_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen_hn)

    p = sub.add_parser("latin", help="write the cyclic symmetric latin square")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_latin)

    p = sub.add_parser("color", help="run the color-matrix procedure")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--trace", action="store_true", help="write trace events to stderr")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against an instance")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic number by backtracking")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.set_defaults(func=cmd_oracle)

    for name, func in (("hunt", cmd_hunt), ("enumerate", cmd_enumerate)):
        p = sub.add_parser(name, help=f"{name} instances through the procedure")
        p.add_argument("--n", type=int, required=True)
        if name == "hunt":
            p.add_argument("--count", type=int, required=True)
            p.add_argument("--p", type=float, required=True)
            p.add_argument("--q", type=float, required=True)
            p.add_argument("--seed", type=int, required=True)
            p.add_argument("--dump-systems", metavar="PATH")
        else:
            p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
        p.add_argument("--witness-dir")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", default="-")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"efl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
