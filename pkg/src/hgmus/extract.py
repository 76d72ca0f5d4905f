"""Group-MUS extraction over an LTUR engine that already holds the hard clauses.

:func:`insertion_mus` is the extractor used during enumeration.  Groups are
added one at a time until the first conflict; the group that caused it (the
transition group) belongs to the MUS, and the next round only scans the
groups that were added before it.  With incremental propagation each round
costs one linear pass over the formula, so extraction is linear in the
formula size times the MUS size.

:func:`deletion_mus` is the usual deletion-based baseline and pays one pass
per candidate group.

Both leave the engine exactly as they found it.
"""

from __future__ import annotations

from typing import Iterable

from .core import GroupedFormula
from .errors import HardConflict, NotUnsat
from .ltur import CONFLICT, LturEngine


def insertion_mus(engine: LturEngine, formula: GroupedFormula,
                  candidates: Iterable[int]) -> list:
    """Return a group-MUS contained in ``candidates``, scanned in the given order.

    >>> from hgmus.core import build_grouped
    >>> f = build_grouped([(-1, -2, 3), (-3,)], [[(1,)], [(2,)]])
    >>> eng = LturEngine.with_clauses(f.num_vars, f.hard)
    >>> insertion_mus(eng, f, [1, 2])
    [1, 2]
    """
    if engine.in_conflict:
        raise HardConflict("hard clauses are unsatisfiable")
    base = engine.checkpoint()
    mus: list = []
    working = list(candidates)
    transition = 0
    while True:
        if transition:
            mus.append(transition)
            if engine.push_clauses(formula.group(transition)) is CONFLICT:
                engine.rollback(base)
                return sorted(mus)
        mark = engine.checkpoint()
        scanned = []
        for g in working:
            scanned.append(g)
            if engine.push_clauses(formula.group(g)) is CONFLICT:
                transition = g
                working = scanned[:-1]
                engine.rollback(mark)
                break
        else:
            engine.rollback(base)
            raise NotUnsat("candidate groups are satisfiable together with the hard clauses")


def deletion_mus(engine: LturEngine, formula: GroupedFormula,
                 candidates: Iterable[int]) -> list:
    """Deletion-based baseline: drop each group whose removal keeps a conflict."""
    if engine.in_conflict:
        raise HardConflict("hard clauses are unsatisfiable")
    working = list(candidates)
    if not _conflicts(engine, formula, working):
        raise NotUnsat("candidate groups are satisfiable together with the hard clauses")
    for g in list(working):
        rest = [h for h in working if h != g]
        if _conflicts(engine, formula, rest):
            working = rest
    return sorted(working)


def _conflicts(engine: LturEngine, formula: GroupedFormula, groups: list) -> bool:
    mark = engine.checkpoint()
    try:
        for g in groups:
            if engine.push_clauses(formula.group(g)) is CONFLICT:
                return True
        return False
    finally:
        engine.rollback(mark)
