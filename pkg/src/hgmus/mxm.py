"""Maximal models of the map formula by linear search.

A maximal model is grown from an initial model: selectors with no negative
occurrence in Q are fixed positive up front, every other selector is tested
once, and selectors that cannot be added are recorded as negative backbone
literals for the rest of the call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .mapsolver import MapSolver


@dataclass(frozen=True)
class MxmState:
    P: frozenset = frozenset()
    U: frozenset = frozenset()
    B: frozenset = frozenset()


@dataclass(frozen=True)
class MxmResult:
    status: bool
    P: frozenset = field(default_factory=frozenset)
    calls: int = 0


def lowest_first(untested: Iterable[int]) -> int:
    return min(untested)


def update_sat(model: Iterable[int], state: MxmState) -> MxmState:
    """Move every untested selector that ``model`` sets to 1 into P."""
    moved = state.U.intersection(l for l in model if l > 0)
    if not moved:
        return state
    return MxmState(state.P | moved, state.U - moved, state.B)


def maximal_model(solver: MapSolver,
                  select: Callable[[Iterable[int]], int] = lowest_first) -> MxmResult:
    calls = 0
    pure = frozenset(solver.pure_positive())
    state = MxmState(pure, frozenset(range(1, solver.k + 1)) - pure)

    st, model = solver.solve(sorted(state.P))
    calls += 1
    if not st:
        return MxmResult(False, frozenset(), calls)
    state = update_sat(model, state)

    while state.U:
        l = select(state.U)
        st, model = solver.solve(sorted(state.P) + sorted(state.B) + [l])
        calls += 1
        if st:
            state = update_sat(model, state)
        else:
            state = MxmState(state.P, state.U - {l}, state.B | {-l})
    return MxmResult(True, state.P, calls)
