"""Command-line entry point: ``hgmus [options] FILE.gcnf``.

Exit codes: 0 complete enumeration, 10 budget exhausted, 20 input error,
30 hard clauses unsatisfiable, 40 satisfiable input (without --allow-sat),
1 oracle validation failure.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .enumerator import EnumConfig, Enumerator
from .errors import (
    BudgetExhausted,
    HardUnsat,
    InputError,
    TotallySat,
    ValidationFailed,
)
from .gcnf import format_result, format_stats, load_gcnf, write_gcnf
from .generate import gen_random

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 10
EXIT_INPUT = 20
EXIT_HARD_UNSAT = 30
EXIT_SAT = 40


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hgmus",
                description="Enumerate group-MUSes of a group-oriented Horn formula.")
    p.add_argument("file", nargs="?", help="GCNF input (omit with --seed to use a generated instance)")
    p.add_argument("--max-mus", type=_positive_int, metavar="N")
    p.add_argument("--max-mcs", type=_positive_int, metavar="N")
    p.add_argument("--timeout", type=float, metavar="S", help="wall-clock budget in seconds")
    p.add_argument("--print-mcs", action="store_true", help="also print group-MCSes")
    p.add_argument("--allow-sat", action="store_true",
                   help="treat a satisfiable formula as having the single empty MCS")
    p.add_argument("--validate", action="store_true",
                   help=f"cross-check against brute force (at most {oracle.MAX_GROUPS} groups)")
    p.add_argument("--stats", action="store_true", help="print solver counters as comment lines")
    gen = p.add_argument_group("generator")
    gen.add_argument("--seed", type=int, help="generate a random instance with this seed")
    gen.add_argument("--gen-vars", type=_positive_int, default=20, metavar="N")
    gen.add_argument("--gen-groups", type=_positive_int, default=8, metavar="K")
    gen.add_argument("--gen-density", type=float, default=0.5, metavar="D")
    gen.add_argument("--write-instance", metavar="PATH",
                     help="write the instance being solved as GCNF")
    return p


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)

    try:
        if args.file is not None:
            formula = load_gcnf(args.file)
        elif args.seed is not None:
            formula = gen_random(args.gen_vars, args.gen_groups, args.gen_density, args.seed)
        else:
            print("hgmus: error: give an input file or --seed", file=err)
            return EXIT_INPUT
    except (InputError, ValueError, OSError) as e:
        print(f"hgmus: error: {e}", file=err)
        return EXIT_INPUT

    if args.write_instance:
        with open(args.write_instance, "w") as fh:
            fh.write(write_gcnf(formula))
    if args.validate and formula.k > oracle.MAX_GROUPS:
        print(f"hgmus: error: --validate needs at most {oracle.MAX_GROUPS} groups, "
              f"instance has {formula.k}", file=err)
        return EXIT_INPUT

    cfg = EnumConfig(max_muses=args.max_mus, max_mcses=args.max_mcs,
                     time_budget=args.timeout, report_mcs=args.print_mcs,
                     validate=args.validate, allow_sat=args.allow_sat)

    def sink(kind, ids):
        print(format_result(kind, ids), file=out, flush=True)

    enum = Enumerator(formula, cfg)
    code = EXIT_OK
    try:
        stats = enum.run(sink)
    except BudgetExhausted as e:
        stats, code = e.stats, EXIT_BUDGET
        print(f"hgmus: {e}", file=err)
    except HardUnsat as e:
        print(f"hgmus: {e}", file=err)
        return EXIT_HARD_UNSAT
    except TotallySat as e:
        print(f"hgmus: {e}", file=err)
        return EXIT_SAT
    except ValidationFailed as e:
        print(f"hgmus: validation failed: {e}", file=err)
        return EXIT_VALIDATION

    if args.stats:
        ttf = "-" if stats.time_to_first_mus is None else f"{stats.time_to_first_mus:.3f}"
        print(f"c groups={formula.k} vars={formula.num_vars} size={formula.size_lits}", file=out)
        print(f"c map_solver_calls={stats.map_solver_calls} ltur_pushes={stats.ltur_pushes} "
              f"ltur_work={stats.ltur_work} first_mus={ttf}", file=out)
    print(format_stats(stats.mus_count, stats.mcs_count, stats.iterations, stats.elapsed),
          file=out, flush=True)
    return code


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
