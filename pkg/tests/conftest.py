import random

import pytest
from hypothesis import settings

from hgmus.core import build_grouped
from hgmus.errors import TotallySat
from hgmus.generate import gen_random
from hgmus.ltur import CONFLICT, LturEngine

# Brute-force oracles are slow by design.
settings.register_profile("hgmus", deadline=None)
settings.load_profile("hgmus")

# a=1, b=2, c=3
E1_HARD = [(-1, 3), (-2, 3), (-3,)]
E2_HARD = [(-1, -2, 3), (-3,)]
E3_HARD = [(-1,)]


@pytest.fixture
def e1():
    return build_grouped(E1_HARD, [[(1,)], [(2,)]], 3)


@pytest.fixture
def e2():
    return build_grouped(E2_HARD, [[(1,)], [(2,)]], 3)


@pytest.fixture
def e3():
    return build_grouped(E3_HARD, [[(1,)]], 1)


def loaded_engine(f):
    eng = LturEngine(f.num_vars)
    eng.push_clauses(f.hard)
    return eng


def is_unsat_overall(f):
    eng = loaded_engine(f)
    if eng.in_conflict:
        return False
    for g in f.group_ids():
        if eng.push_clauses(f.group(g)) is CONFLICT:
            return True
    return False


def random_unsat_instances(count, seed=0, max_groups=12, max_vars=25,
                           density=(0.4, 0.9)):
    """Seeded unsatisfiable instances of the generator family."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(1, max_groups)
        n = rng.randint(k + 1, max_vars)
        f = gen_random(n, k, rng.uniform(*density), rng.randrange(2**31))
        if is_unsat_overall(f):
            out.append(f)
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
