"""SAT oracle for the selector formula that drives enumeration.

The map formula only ever grows: positive clauses block correction sets and
negative clauses block unsatisfiable cores.  It is small compared with the Horn
instance, so a compact CDCL search (two watched literals, first-UIP learning,
activity-based branching) is enough.  Assumptions occupy the first decision
levels, as in MiniSat.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import OutOfRangeSelector


def _idx(lit: int) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


class MapSolver:
    """Incremental CNF solver over selectors ``1..k``.

    ``clauses`` holds the clauses added by the caller (the map formula Q);
    learned clauses are kept internally and never show up there.
    Unconstrained selectors are completed with value 1 in returned models.
    """

    def __init__(self, num_selectors: int):
        self.k = num_selectors
        self.clauses: list = []
        self.pos_count = [0] * (num_selectors + 1)
        self.neg_count = [0] * (num_selectors + 1)
        self.calls = 0
        self.conflicts = 0
        self._db: list = []
        self._units: list = []
        self._watches: list = [[] for _ in range(2 * num_selectors + 2)]
        self._activity = [0.0] * (num_selectors + 1)
        self._inc = 1.0
        self._root_unsat = False
        self._value = [0] * (num_selectors + 1)
        self._level = [0] * (num_selectors + 1)
        self._reason: list = [None] * (num_selectors + 1)
        self._trail: list = []
        self._trail_lim: list = []
        self._qhead = 0

    @property
    def num_selectors(self) -> int:
        return self.k

    def add_clause(self, lits: Iterable[int]) -> None:
        lits = list(dict.fromkeys(lits))
        for l in lits:
            if l == 0 or abs(l) > self.k:
                raise OutOfRangeSelector(l)
        self.clauses.append(tuple(lits))
        for l in lits:
            if l > 0:
                self.pos_count[l] += 1
            else:
                self.neg_count[-l] += 1
        if any(-l in lits for l in lits):
            return
        self._store(lits)

    def _store(self, lits: list) -> Optional[int]:
        if not lits:
            self._root_unsat = True
            return None
        if len(lits) == 1:
            self._units.append(lits[0])
            return None
        cid = len(self._db)
        self._db.append(lits)
        self._watches[_idx(lits[0])].append(cid)
        self._watches[_idx(lits[1])].append(cid)
        return cid

    def pure_positive(self) -> set:
        """Selectors with no negative occurrence in Q (absent ones included)."""
        return {v for v in range(1, self.k + 1) if self.neg_count[v] == 0}

    # -- search -----------------------------------------------------------

    def _lit_value(self, lit: int) -> int:
        v = self._value[abs(lit)]
        return v if lit > 0 else -v

    def _assign(self, lit: int, reason: Optional[int]) -> None:
        v = abs(lit)
        self._value[v] = 1 if lit > 0 else -1
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(lit)

    def _propagate(self) -> Optional[int]:
        db = self._db
        watches = self._watches
        while self._qhead < len(self._trail):
            false_lit = -self._trail[self._qhead]
            self._qhead += 1
            ws = watches[_idx(false_lit)]
            keep = []
            i = 0
            n = len(ws)
            while i < n:
                cid = ws[i]
                i += 1
                c = db[cid]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                if self._lit_value(c[0]) == 1:
                    keep.append(cid)
                    continue
                for j in range(2, len(c)):
                    if self._lit_value(c[j]) != -1:
                        c[1], c[j] = c[j], c[1]
                        watches[_idx(c[1])].append(cid)
                        break
                else:
                    keep.append(cid)
                    if self._lit_value(c[0]) == -1:
                        keep.extend(ws[i:])
                        watches[_idx(false_lit)] = keep
                        return cid
                    self._assign(c[0], cid)
            watches[_idx(false_lit)] = keep
        return None

    def _backtrack(self, level: int) -> None:
        if len(self._trail_lim) <= level:
            return
        start = self._trail_lim[level]
        for lit in self._trail[start:]:
            self._value[abs(lit)] = 0
            self._reason[abs(lit)] = None
        del self._trail[start:]
        del self._trail_lim[level:]
        self._qhead = len(self._trail)

    def _bump(self, v: int) -> None:
        self._activity[v] += self._inc
        if self._activity[v] > 1e100:
            self._activity = [a * 1e-100 for a in self._activity]
            self._inc *= 1e-100

    def _analyze(self, cid: int):
        seen = [False] * (self.k + 1)
        learnt = [0]
        current = len(self._trail_lim)
        pending = 0
        p = None
        idx = len(self._trail) - 1
        clause = self._db[cid]
        while True:
            for q in (clause if p is None else clause[1:]):
                v = abs(q)
                if not seen[v] and self._level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if self._level[v] == current:
                        pending += 1
                    else:
                        learnt.append(q)
            while not seen[abs(self._trail[idx])]:
                idx -= 1
            p = self._trail[idx]
            idx -= 1
            seen[abs(p)] = False
            pending -= 1
            if pending == 0:
                break
            clause = self._db[self._reason[abs(p)]]
        learnt[0] = -p
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda i: self._level[abs(learnt[i])])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, self._level[abs(learnt[1])]

    def _pick_branch(self) -> int:
        best, best_act = 0, -1.0
        for v in range(1, self.k + 1):
            if self._value[v] == 0 and self._activity[v] > best_act:
                best, best_act = v, self._activity[v]
        return best

    def solve(self, assumptions: Iterable[int] = ()):
        """Decide Q under ``assumptions``.

        Returns ``(True, model)`` with ``model`` a list of signed literals for
        selectors ``1..k``, or ``(False, None)``.
        """
        self.calls += 1
        assumptions = list(assumptions)
        for a in assumptions:
            if a == 0 or abs(a) > self.k:
                raise OutOfRangeSelector(a)
        if self._root_unsat:
            return False, None
        self._backtrack(0)
        for v in range(1, self.k + 1):
            self._value[v] = 0
            self._reason[v] = None
        self._trail.clear()
        self._qhead = 0
        for u in self._units:
            val = self._lit_value(u)
            if val == -1:
                self._root_unsat = True
                return False, None
            if val == 0:
                self._assign(u, None)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                if not self._trail_lim:
                    self._root_unsat = True
                    return False, None
                learnt, level = self._analyze(confl)
                self._backtrack(level)
                cid = self._store(learnt)
                self._assign(learnt[0], cid)
                self._inc /= 0.95
                continue
            level = len(self._trail_lim)
            if level < len(assumptions):
                a = assumptions[level]
                val = self._lit_value(a)
                if val == -1:
                    self._backtrack(0)
                    return False, None
                self._trail_lim.append(len(self._trail))
                if val == 0:
                    self._assign(a, None)
                continue
            v = self._pick_branch()
            if v == 0:
                model = [v if self._value[v] == 1 else -v for v in range(1, self.k + 1)]
                self._backtrack(0)
                return True, model
            self._trail_lim.append(len(self._trail))
            self._assign(v, None)
