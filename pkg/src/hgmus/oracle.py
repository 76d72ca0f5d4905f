"""Definition-level reference implementations, used to check the solver.

Nothing here touches the LTUR engine or the map solver.  Group subsets are
bitmasks over ``1..k`` (bit ``i-1`` is group ``i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import GroupedFormula
from .errors import TooLarge

MAX_GROUPS = 20
MAX_SELECTORS = 16
MAX_TRUTH_TABLE_VARS = 20


@dataclass(frozen=True)
class OracleReport:
    muses: frozenset
    mcses: frozenset
    duality_ok: bool


def _masks(clauses):
    out = []
    for c in clauses:
        body = 0
        for v in c.body:
            body |= 1 << v
        out.append((body, 0 if c.head is None else 1 << c.head))
    return out


def horn_sat_fixpoint(clauses) -> bool:
    """Least-model check by repeated full scans until nothing changes."""
    masks = _masks(clauses)
    model = 0
    changed = True
    while changed:
        changed = False
        for body, head in masks:
            if body & ~model == 0:
                if not head:
                    return False
                if not model & head:
                    model |= head
                    changed = True
    return True


def sat_truth_table(clauses, num_vars: int) -> bool:
    """Satisfiability by enumerating every assignment.  Any CNF, tiny inputs."""
    if num_vars > MAX_TRUTH_TABLE_VARS:
        raise TooLarge(f"{num_vars} variables")
    lits = [c.literals if hasattr(c, "literals") else tuple(c) for c in clauses]
    for bits in product((False, True), repeat=num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in lits):
            return True
    return False


def _members(mask: int, k: int) -> frozenset:
    return frozenset(i + 1 for i in range(k) if mask >> i & 1)


def sat_table(f: GroupedFormula) -> list:
    """``table[mask]`` is True iff G0 plus the groups in ``mask`` is satisfiable."""
    k = f.k
    if k > MAX_GROUPS:
        raise TooLarge(f"{k} groups exceeds {MAX_GROUPS}")
    table = [True] * (1 << k)
    for mask in range(1 << k):
        # Satisfiability is anti-monotone: a superset of an unsatisfiable set is too.
        if any(mask >> i & 1 and not table[mask & ~(1 << i)] for i in range(k)):
            table[mask] = False
            continue
        clauses = list(f.hard)
        for i in range(k):
            if mask >> i & 1:
                clauses.extend(f.groups[i])
        table[mask] = horn_sat_fixpoint(clauses)
    return table


def all_muses(f: GroupedFormula, table=None) -> frozenset:
    """Subsets G with G0 ∪ G unsatisfiable and every one-smaller subset satisfiable."""
    table = table or sat_table(f)
    k = f.k
    return frozenset(
        _members(m, k) for m in range(1 << k)
        if not table[m] and all(table[m & ~(1 << i)] for i in range(k) if m >> i & 1))


def all_mcses(f: GroupedFormula, table=None) -> frozenset:
    """Complements of the maximal satisfiable group subsets."""
    table = table or sat_table(f)
    k = f.k
    full = (1 << k) - 1
    return frozenset(
        _members(full & ~m, k) for m in range(1 << k)
        if table[m] and all(not table[m | 1 << i] for i in range(k) if not m >> i & 1))


def all_maximal_models(solver) -> frozenset:
    """Positive sets of the set-maximal models of the map formula ``solver.clauses``."""
    k = solver.k
    if k > MAX_SELECTORS:
        raise TooLarge(f"{k} selectors exceeds {MAX_SELECTORS}")
    models = []
    for bits in product((False, True), repeat=k):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in solver.clauses):
            models.append(frozenset(i + 1 for i in range(k) if bits[i]))
    return frozenset(m for m in models if not any(m < o for o in models))


def is_minimal_hitting_set(h, family) -> bool:
    if not all(h & s for s in family):
        return False
    return all(any(not (h - {e}) & s for s in family) for e in h)


def check_duality(muses, mcses) -> bool:
    muses = [frozenset(m) for m in muses]
    mcses = [frozenset(c) for c in mcses]
    return (all(is_minimal_hitting_set(m, mcses) for m in muses)
            and all(is_minimal_hitting_set(c, muses) for c in mcses))


def report(f: GroupedFormula) -> OracleReport:
    table = sat_table(f)
    muses = all_muses(f, table)
    mcses = all_mcses(f, table)
    return OracleReport(muses, mcses, check_duality(muses, mcses))
