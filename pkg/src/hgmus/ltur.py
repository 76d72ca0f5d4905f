"""Incremental linear-time unit resolution (LTUR) for Horn clauses.

Only positive assignments are ever made and propagated.  Each clause keeps a
counter of body variables not yet true; a clause whose counter reaches zero
either forces its head or, when headless, signals a conflict.  Clauses are
reached through per-variable adjacency lists over bodies, so every body
occurrence is visited at most once per propagation epoch.

The engine supports clause addition, checkpoints and rollback.  Rollback
undoes counter decrements for the variables propagated after the mark and
drops the clauses added after it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import CalledInConflict, StaleCheckpoint

CONSISTENT = True
CONFLICT = False

_tokens = itertools.count(1)


@dataclass(frozen=True)
class Checkpoint:
    trail_length: int
    clause_count: int
    token: Optional[int] = field(default=None, compare=False, repr=False)


class LturEngine:
    """Mutable LTUR state over variables ``1..num_vars``.

    ``work`` counts literal visits: one per literal of every pushed clause and
    one per adjacency-list entry scanned while propagating.  Rollback only
    retraces visits already counted, so it is not charged again.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.value = bytearray(num_vars + 1)
        self.trail: list = []
        self.qhead = 0
        self.heads: list = []
        self.bodies: list = []
        self.counters: list = []
        self.watch: list = [[] for _ in range(num_vars + 1)]
        self.conflict: Optional[int] = None
        self.work = 0
        self.pushes = 0
        self._live: dict = {}

    @classmethod
    def with_clauses(cls, num_vars: int, clauses: Iterable) -> "LturEngine":
        eng = cls(num_vars)
        eng.push_clauses(clauses)
        return eng

    @property
    def in_conflict(self) -> bool:
        return self.conflict is not None

    @property
    def num_clauses(self) -> int:
        return len(self.heads)

    def is_true(self, var: int) -> bool:
        return bool(self.value[var])

    def true_vars(self) -> list:
        return list(self.trail)

    def push_clauses(self, clauses: Iterable) -> bool:
        """Add Horn clauses and propagate.  Returns ``CONSISTENT`` or ``CONFLICT``."""
        if self.conflict is not None:
            raise CalledInConflict("rollback before pushing more clauses")
        self.pushes += 1
        value = self.value
        for cl in clauses:
            cid = len(self.heads)
            body = tuple(cl.body)
            self.heads.append(cl.head)
            self.bodies.append(body)
            self.work += len(body) + (cl.head is not None)
            remaining = 0
            for v in body:
                self.watch[v].append(cid)
                if not value[v]:
                    remaining += 1
            self.counters.append(remaining)
            if remaining == 0:
                # Propagate at once: a later clause of the batch computes its
                # counter from current values and must not see a queued
                # variable that will decrement it again.
                self._fire(cid)
                if self.conflict is not None or self._propagate() is CONFLICT:
                    return CONFLICT
        return CONSISTENT

    def _fire(self, cid: int) -> None:
        head = self.heads[cid]
        if head is None:
            self.conflict = cid
        elif not self.value[head]:
            self.value[head] = 1
            self.trail.append(head)

    def _propagate(self) -> bool:
        trail = self.trail
        counters = self.counters
        watch = self.watch
        while self.qhead < len(trail):
            v = trail[self.qhead]
            self.qhead += 1
            adj = watch[v]
            self.work += len(adj)
            # The whole list is processed even past a conflict, so that every
            # propagated variable has decremented all of its clauses.
            for cid in adj:
                counters[cid] -= 1
                if counters[cid] == 0 and self.conflict is None:
                    self._fire(cid)
            if self.conflict is not None:
                return CONFLICT
        return CONSISTENT

    def checkpoint(self) -> Checkpoint:
        if self.conflict is not None:
            # Part of the queue is unpropagated; such a state cannot be restored.
            raise CalledInConflict("checkpoint taken in conflict")
        mark = Checkpoint(len(self.trail), len(self.heads), next(_tokens))
        self._live[mark.token] = mark
        return mark

    def rollback(self, mark: Checkpoint) -> None:
        t, c = mark.trail_length, mark.clause_count
        if mark.token is None:
            if t > len(self.trail) or c > len(self.heads):
                raise StaleCheckpoint(mark)
        elif mark.token not in self._live:
            raise StaleCheckpoint(mark)
        # Removed clauses are the newest entries of each adjacency list, so
        # dropping them first leaves exactly the surviving clauses to restore.
        for cid in range(len(self.heads) - 1, c - 1, -1):
            for v in self.bodies[cid]:
                self.watch[v].pop()
        del self.heads[c:], self.bodies[c:], self.counters[c:]
        counters = self.counters
        for v in self.trail[t:self.qhead]:
            for cid in self.watch[v]:
                counters[cid] += 1
        for v in self.trail[t:]:
            self.value[v] = 0
        del self.trail[t:]
        self.qhead = t
        self.conflict = None
        self._live = {tok: m for tok, m in self._live.items()
                      if m.trail_length <= t and m.clause_count <= c}

    def snapshot(self) -> tuple:
        """Observable state, for equality checks in tests."""
        return (tuple(self.trail), tuple(self.heads), tuple(self.bodies),
                tuple(self.counters), self.conflict, bytes(self.value))
