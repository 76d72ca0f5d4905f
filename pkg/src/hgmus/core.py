"""Propositional data model: literals, Horn clauses and grouped formulae.

Literals follow the DIMACS convention: variable ``v`` is the int ``v`` and its
negation is ``-v``.  A plain clause is any sequence of such ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    EmptyClauseInGroup,
    HeaderMismatch,
    NoGroups,
    NonHornClause,
    TautologicalClause,
)

Clause = Sequence[int]


@dataclass(frozen=True)
class HornClause:
    """``body -> head``; a headless clause is a purely negative constraint."""

    body: frozenset
    head: Optional[int] = None

    def __post_init__(self):
        if self.head is not None and self.head in self.body:
            raise ValueError("head variable also occurs in the body")

    def __len__(self):
        return len(self.body) + (self.head is not None)

    @property
    def literals(self) -> tuple:
        lits = tuple(-v for v in sorted(self.body))
        if self.head is not None:
            lits += (self.head,)
        return lits

    @property
    def variables(self) -> frozenset:
        if self.head is None:
            return self.body
        return self.body | {self.head}

    @classmethod
    def from_literals(cls, lits: Clause) -> "HornClause":
        (horn,) = validate_horn([lits])
        return horn


def validate_horn(clauses: Iterable[Clause], allow_empty: bool = True, offset: int = 0):
    """Rewrite literal clauses into :class:`HornClause` form, preserving order.

    Duplicate literals inside a clause are merged. ``offset`` shifts the index
    carried by the raised errors, so callers validating a slice of a larger
    clause list can report global positions.
    """
    out = []
    for i, lits in enumerate(clauses):
        idx = offset + i
        lits = set(lits)
        if 0 in lits:
            raise ValueError("0 is not a literal")
        if any(-l in lits for l in lits):
            raise TautologicalClause(idx)
        heads = [l for l in lits if l > 0]
        if len(heads) > 1:
            raise NonHornClause(idx)
        if not lits and not allow_empty:
            raise EmptyClauseInGroup(idx)
        body = frozenset(-l for l in lits if l < 0)
        out.append(HornClause(body, heads[0] if heads else None))
    return out


@dataclass(frozen=True)
class SelectorMap:
    """Bijection between soft group ``i`` and map-formula selector ``p_i``.

    Selectors are numbered like the groups, so the mapping is the identity on
    ``1..k``; the class exists to keep the two index spaces apart in code.
    """

    k: int

    def selector(self, group: int) -> int:
        if not 1 <= group <= self.k:
            raise KeyError(group)
        return group

    def group(self, selector: int) -> int:
        if not 1 <= selector <= self.k:
            raise KeyError(selector)
        return selector

    def selectors(self) -> range:
        return range(1, self.k + 1)


@dataclass(frozen=True)
class GroupedFormula:
    """Hard clauses ``G0`` plus soft groups ``G1..Gk`` of Horn clauses.

    ``groups[i - 1]`` holds group ``i``.
    """

    num_vars: int
    hard: tuple
    groups: tuple
    size_lits: int = field(init=False)

    def __post_init__(self):
        if not self.groups:
            raise NoGroups("a grouped formula needs at least one soft group")
        total = 0
        for cl in self.all_clauses():
            for v in cl.variables:
                if v > self.num_vars:
                    raise HeaderMismatch(f"variable {v} exceeds num_vars={self.num_vars}")
            total += len(cl)
        object.__setattr__(self, "size_lits", total)

    @property
    def k(self) -> int:
        return len(self.groups)

    @property
    def selectors(self) -> SelectorMap:
        return SelectorMap(self.k)

    def group(self, i: int) -> tuple:
        if not 1 <= i <= self.k:
            raise KeyError(i)
        return self.groups[i - 1]

    def group_ids(self) -> range:
        return range(1, self.k + 1)

    def all_clauses(self) -> Iterator[HornClause]:
        yield from self.hard
        for g in self.groups:
            yield from g

    def flatten(self) -> list:
        """All clauses as ``(group_id, literals)`` pairs, hard clauses under 0."""
        out = [(0, c.literals) for c in self.hard]
        for i, g in enumerate(self.groups, 1):
            out.extend((i, c.literals) for c in g)
        return out


def build_grouped(hard: Iterable[Clause], groups: Iterable[Iterable[Clause]],
                  num_vars: Optional[int] = None) -> GroupedFormula:
    """Validate and assemble a :class:`GroupedFormula`.

    Groups are numbered 1..k in input order.  When ``num_vars`` is omitted it
    is taken as the largest variable that occurs.
    """
    hard = list(hard)
    groups = [list(g) for g in groups]
    horn_hard = validate_horn(hard)
    horn_groups = []
    offset = len(hard)
    for g in groups:
        if not g:
            raise EmptyClauseInGroup(offset)
        horn_groups.append(tuple(validate_horn(g, allow_empty=False, offset=offset)))
        offset += len(g)
    if num_vars is None:
        num_vars = max((abs(l) for cl in hard + [c for g in groups for c in g] for l in cl),
                       default=0)
    return GroupedFormula(num_vars, tuple(horn_hard), tuple(horn_groups))
