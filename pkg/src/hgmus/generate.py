"""Seeded random group-Horn instances for tests and benchmarks."""

from __future__ import annotations

import random

from .core import GroupedFormula, build_grouped


def gen_random(num_vars: int, num_groups: int, density: float = 0.5,
               seed: int = 0, max_body: int = 3) -> GroupedFormula:
    """Random layered Horn instance.

    Variables are put in a random order.  The first ``num_groups`` of them are
    asserted by one unit group each; every later variable gets between 0 and 3
    rules (each present with probability ``density``) whose bodies are drawn
    from earlier variables.  The last variable is the goal: it always gets at
    least one rule and the hard clauses forbid it.  The same arguments always
    yield the same instance.
    """
    if num_groups < 1 or num_vars < num_groups + 1:
        raise ValueError("need num_groups >= 1 and num_vars > num_groups")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(1, num_vars + 1))
    rng.shuffle(order)
    goal = order[-1]
    hard = []
    for pos in range(num_groups, num_vars):
        var = order[pos]
        n_rules = sum(rng.random() < density for _ in range(3))
        if var == goal:
            n_rules = max(n_rules, 1)
        for _ in range(n_rules):
            size = rng.randint(1, min(max_body, pos))
            body = sorted(rng.sample(order[:pos], size))
            hard.append(tuple(-b for b in body) + (var,))
    hard.append((-goal,))
    groups = [[(v,)] for v in order[:num_groups]]
    return build_grouped(hard, groups, num_vars)


def implication_chain(length: int, start_fact: bool = True) -> GroupedFormula:
    """``x1, x1 -> x2, ..., x(n-1) -> xn`` as hard clauses, goal ``-xn`` in group 1."""
    hard = [(1,)] if start_fact else []
    hard += [(-i, i + 1) for i in range(1, length)]
    return build_grouped(hard, [[(-length,)]], length)


def extraction_instance(num_groups: int, tail: int = 4) -> GroupedFormula:
    """Unsatisfiable instance whose only group-MUS is its last two groups.

    Groups ``1..k-2`` each assert a fact that feeds a private implication
    chain of ``tail`` clauses, so the formula grows linearly with the number
    of groups while the MUS stays at size two.
    """
    if num_groups < 2:
        raise ValueError("need at least two groups")
    a, b, goal = 1, 2, 3
    hard = [(-a, -b, goal), (-goal,)]
    groups = []
    nxt = 4
    for _ in range(num_groups - 2):
        x = nxt
        groups.append([(x,)])
        for j in range(tail):
            hard.append((-(x + j), x + j + 1))
        nxt += tail + 1
    groups += [[(a,)], [(b,)]]
    return build_grouped(hard, groups, nxt - 1)
