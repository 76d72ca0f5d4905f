"""Group-MUS/MCS enumeration by implicit hitting set dualization.

Each iteration asks the map solver for a maximal model P of Q and tests the
selected groups against the hard clauses with LTUR:

* conflict: P is reduced to a group-MUS, reported, and blocked with the
  negative clause over its selectors;
* no conflict: P is a maximal satisfiable group set, so its complement is a
  group-MCS, reported and blocked with the positive clause over its
  selectors.

The complement needs no further minimization.  Suppose G0 ∪ P ∪ {g} were
satisfiable for some g outside P.  Then P ∪ {g} contains no MUS found so far,
so every negative clause of Q still holds, and P alone already satisfies
every positive clause.  P ∪ {g} would be a model of Q, contradicting the
maximality of P.  Hence P is a maximal satisfiable group set.

Each iteration finds a set not seen before, so the loop ends after exactly
|MUSes| + |MCSes| iterations, when Q becomes unsatisfiable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from .core import GroupedFormula
from .errors import BudgetExhausted, HardUnsat, TotallySat, ValidationFailed
from .extract import insertion_mus
from .ltur import CONFLICT, LturEngine
from .mapsolver import MapSolver
from .mxm import maximal_model

MUS = "MUS"
MCS = "MCS"

Sink = Callable[[str, tuple], None]


@dataclass
class EnumConfig:
    max_muses: Optional[int] = None
    max_mcses: Optional[int] = None
    time_budget: Optional[float] = None
    report_mcs: bool = True
    validate: bool = False
    allow_sat: bool = False

    def __post_init__(self):
        for name in ("max_muses", "max_mcses"):
            cap = getattr(self, name)
            if cap is not None and cap < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.time_budget is not None and self.time_budget < 0:
            raise ValueError("time_budget must be non-negative")


@dataclass
class EnumerationStats:
    mus_count: int = 0
    mcs_count: int = 0
    iterations: int = 0
    map_solver_calls: int = 0
    ltur_pushes: int = 0
    ltur_work: int = 0
    elapsed: float = 0.0
    time_to_first_mus: Optional[float] = None
    complete: bool = False


def block_mus(solver: MapSolver, mus) -> None:
    """Forbid every superset of ``mus``: at least one of its groups must go."""
    if not mus:
        raise ValueError("cannot block an empty MUS")
    solver.add_clause([-g for g in sorted(mus)])


def block_mcs(solver: MapSolver, mcs) -> None:
    """Forbid ``mcs`` and its supersets: at least one of its groups must stay."""
    if not mcs:
        raise ValueError("cannot block an empty MCS")
    solver.add_clause(sorted(mcs))


class Enumerator:
    """One enumeration run; owns its LTUR engine and map solver."""

    def __init__(self, formula: GroupedFormula, config: Optional[EnumConfig] = None):
        self.formula = formula
        self.config = config or EnumConfig()
        self.engine = LturEngine(formula.num_vars)
        self.map = MapSolver(formula.k)
        self.stats = EnumerationStats()
        self.muses: list = []
        self.mcses: list = []

    def _selected_conflicts(self, selected) -> bool:
        mark = self.engine.checkpoint()
        try:
            for g in selected:
                if self.engine.push_clauses(self.formula.group(g)) is CONFLICT:
                    return True
            return False
        finally:
            self.engine.rollback(mark)

    def _sync(self, start: float) -> None:
        self.stats.map_solver_calls = self.map.calls
        self.stats.ltur_pushes = self.engine.pushes
        self.stats.ltur_work = self.engine.work
        self.stats.elapsed = time.perf_counter() - start

    def _budget_hit(self, start: float) -> Optional[str]:
        cfg = self.config
        if cfg.max_muses is not None and self.stats.mus_count >= cfg.max_muses:
            return "max-mus"
        if cfg.max_mcses is not None and self.stats.mcs_count >= cfg.max_mcses:
            return "max-mcs"
        if cfg.time_budget is not None and time.perf_counter() - start >= cfg.time_budget:
            return "timeout"
        return None

    def run(self, sink: Optional[Sink] = None) -> EnumerationStats:
        f, cfg, stats = self.formula, self.config, self.stats
        sink = sink or (lambda kind, ids: None)
        start = time.perf_counter()

        if self.engine.push_clauses(f.hard) is CONFLICT:
            raise HardUnsat("hard clauses are unsatisfiable on their own")
        all_groups = list(f.group_ids())
        if not self._selected_conflicts(all_groups):
            if not cfg.allow_sat:
                raise TotallySat("the formula is satisfiable; nothing to enumerate")
            stats.mcs_count = stats.iterations = 1
            self.mcses.append(())
            if cfg.report_mcs:
                sink(MCS, ())
            stats.complete = True
            self._sync(start)
            return stats

        while True:
            res = maximal_model(self.map)
            if not res.status:
                break
            # Checked after the map query so a run that has in fact finished
            # is never reported as partial.
            reason = self._budget_hit(start)
            if reason:
                self._sync(start)
                raise BudgetExhausted(stats, reason)
            stats.iterations += 1
            selected = sorted(res.P)
            if self._selected_conflicts(selected):
                mus = tuple(insertion_mus(self.engine, f, selected))
                stats.mus_count += 1
                if stats.time_to_first_mus is None:
                    stats.time_to_first_mus = time.perf_counter() - start
                self.muses.append(mus)
                sink(MUS, mus)
                block_mus(self.map, mus)
            else:
                mcs = tuple(g for g in all_groups if g not in res.P)
                stats.mcs_count += 1
                self.mcses.append(mcs)
                if cfg.report_mcs:
                    sink(MCS, mcs)
                block_mcs(self.map, mcs)

        stats.complete = True
        self._sync(start)
        if cfg.validate:
            self.validate()
        return stats

    def validate(self) -> None:
        """Cross-check the complete output against the brute-force oracle."""
        from . import oracle

        rep = oracle.report(self.formula)
        got_mus = [frozenset(m) for m in self.muses]
        got_mcs = [frozenset(c) for c in self.mcses]
        if len(set(got_mus)) != len(got_mus) or set(got_mus) != rep.muses:
            raise ValidationFailed("MUS set differs from the brute-force oracle")
        if len(set(got_mcs)) != len(got_mcs) or set(got_mcs) != rep.mcses:
            raise ValidationFailed("MCS set differs from the brute-force oracle")
        if not oracle.check_duality(got_mus, got_mcs):
            raise ValidationFailed("MUS and MCS families are not hitting-set duals")


def enumerate_groups(formula: GroupedFormula, config: Optional[EnumConfig] = None,
                     sink: Optional[Sink] = None) -> EnumerationStats:
    """Enumerate all group-MUSes (and group-MCSes) of ``formula``.

    Results are passed to ``sink(kind, group_ids)`` as soon as they are found,
    with ``kind`` either ``"MUS"`` or ``"MCS"`` and ids ascending.
    """
    return Enumerator(formula, config).run(sink)
