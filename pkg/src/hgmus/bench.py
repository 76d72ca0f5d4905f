"""Benchmark harness: ``hgmus-bench``.

Runs two experiments on generated instances and writes one CSV per
experiment, plus a PNG figure for each unless ``--no-plots`` is given:

* ``enumeration.csv``: MUS throughput and time to first MUS per instance;
* ``extraction.csv``: LTUR work of insertion vs deletion extraction on
  instances with a size-two MUS and a growing number of groups.
"""

from __future__ import annotations

import argparse
import csv
import os
import random
import sys
import time

from .enumerator import EnumConfig, Enumerator
from .errors import BudgetExhausted, TotallySat
from .extract import deletion_mus, insertion_mus
from .generate import extraction_instance, gen_random
from .ltur import LturEngine

ENUM_FIELDS = ["seed", "groups", "vars", "size_lits", "muses", "mcses", "iterations",
               "complete", "elapsed", "time_to_first_mus", "mus_per_sec",
               "map_solver_calls", "ltur_work"]
EXTRACT_FIELDS = ["groups", "size_lits", "mus_size", "insertion_work", "deletion_work",
                  "work_ratio", "insertion_time", "deletion_time"]


def enumeration_rows(instances, min_groups, max_groups, density, seed, timeout):
    rng = random.Random(seed)
    rows = []
    while len(rows) < instances:
        s = rng.randrange(2**31)
        k = rng.randint(min_groups, max_groups)
        f = gen_random(k * 2 + rng.randint(1, k), k, density, s)
        enum = Enumerator(f, EnumConfig(time_budget=timeout))
        try:
            stats = enum.run()
        except TotallySat:
            continue
        except BudgetExhausted as e:
            stats = e.stats
        rows.append({
            "seed": s, "groups": f.k, "vars": f.num_vars, "size_lits": f.size_lits,
            "muses": stats.mus_count, "mcses": stats.mcs_count,
            "iterations": stats.iterations, "complete": stats.complete,
            "elapsed": stats.elapsed,
            "time_to_first_mus": stats.time_to_first_mus or 0.0,
            "mus_per_sec": stats.mus_count / stats.elapsed if stats.elapsed else 0.0,
            "map_solver_calls": stats.map_solver_calls, "ltur_work": stats.ltur_work,
        })
    return rows


def extraction_row(k, tail=4):
    f = extraction_instance(k, tail)
    groups = list(f.group_ids())
    eng = LturEngine.with_clauses(f.num_vars, f.hard)
    w0, t0 = eng.work, time.perf_counter()
    mus = insertion_mus(eng, f, groups)
    w1, t1 = eng.work, time.perf_counter()
    deletion_mus(eng, f, groups)
    w2, t2 = eng.work, time.perf_counter()
    return {
        "groups": k, "size_lits": f.size_lits, "mus_size": len(mus),
        "insertion_work": w1 - w0, "deletion_work": w2 - w1,
        "work_ratio": (w1 - w0) / (w2 - w1),
        "insertion_time": t1 - t0, "deletion_time": t2 - t1,
    }


def write_csv(path, fields, rows):
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields)
        w.writeheader()
        w.writerows(rows)


def main(argv=None):
    p = argparse.ArgumentParser(prog="hgmus-bench", description=__doc__.splitlines()[0])
    p.add_argument("--outdir", default="bench-out")
    p.add_argument("--instances", type=int, default=40)
    p.add_argument("--min-groups", type=int, default=4)
    p.add_argument("--max-groups", type=int, default=24)
    p.add_argument("--density", type=float, default=0.6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout", type=float, default=10.0, help="per-instance budget (s)")
    p.add_argument("--sizes", default="100,200,400",
                   help="comma-separated group counts for the extraction experiment")
    p.add_argument("--no-plots", action="store_true")
    args = p.parse_args(argv)

    os.makedirs(args.outdir, exist_ok=True)
    enum_rows = enumeration_rows(args.instances, args.min_groups, args.max_groups,
                                 args.density, args.seed, args.timeout)
    ext_rows = [extraction_row(int(k)) for k in args.sizes.split(",")]
    write_csv(os.path.join(args.outdir, "enumeration.csv"), ENUM_FIELDS, enum_rows)
    write_csv(os.path.join(args.outdir, "extraction.csv"), EXTRACT_FIELDS, ext_rows)
    if not args.no_plots:
        from .plotting import plot_enumeration, plot_extraction

        plot_enumeration(enum_rows, os.path.join(args.outdir, "enumeration.png"))
        plot_extraction(ext_rows, os.path.join(args.outdir, "extraction.png"))

    total_mus = sum(r["muses"] for r in enum_rows)
    total_time = sum(r["elapsed"] for r in enum_rows)
    firsts = sorted(r["time_to_first_mus"] for r in enum_rows if r["muses"])
    print(f"instances={len(enum_rows)} muses={total_mus} "
          f"mus_per_sec={total_mus / total_time:.1f} "
          f"median_first_mus_ms={firsts[len(firsts) // 2] * 1e3:.2f}")
    for r in ext_rows:
        print(f"groups={r['groups']} insertion_work={r['insertion_work']} "
              f"deletion_work={r['deletion_work']} ratio={r['work_ratio']:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
