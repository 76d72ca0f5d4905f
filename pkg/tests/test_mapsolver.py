import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hgmus.errors import OutOfRangeSelector
from hgmus.mapsolver import MapSolver
from hgmus.oracle import all_maximal_models


def brute_sat(k, clauses, assumptions=()):
    for bits in itertools.product((False, True), repeat=k):
        val = lambda l: bits[abs(l) - 1] == (l > 0)
        if all(val(a) for a in assumptions) and all(any(val(l) for l in c) for c in clauses):
            return True
    return False


def test_add_clause():
    m = MapSolver(2)
    m.add_clause([-1])
    assert m.clauses == [(-1,)]
    m.add_clause([1, 2])
    assert m.clauses[-1] == (1, 2)
    with pytest.raises(OutOfRangeSelector):
        m.add_clause([3])


def test_empty_formula_sat():
    st_, model = MapSolver(3).solve()
    assert st_ and sorted(map(abs, model)) == [1, 2, 3]


def test_unconstrained_default_true():
    assert MapSolver(3).solve()[1] == [1, 2, 3]


def test_contradiction():
    m = MapSolver(1)
    m.add_clause([1])
    m.add_clause([-1])
    assert m.solve() == (False, None)


def test_assumption_forces_other():
    m = MapSolver(2)
    m.add_clause([1, 2])
    ok, model = m.solve([-1])
    assert ok and -1 in model and 2 in model
    assert brute_sat(2, [(1, 2)], [-1])


def test_assumption_failure_not_permanent():
    m = MapSolver(2)
    m.add_clause([-1, -2])
    assert m.solve([1, 2]) == (False, None)
    assert m.solve()[0]


def test_pure_positive():
    m = MapSolver(2)
    assert m.pure_positive() == {1, 2}
    m.add_clause([1, 2])
    m.add_clause([-1])
    assert m.pure_positive() == {2}
    m2 = MapSolver(2)
    m2.add_clause([-1])
    m2.add_clause([-2])
    assert m2.pure_positive() == set()


cnf_st = st.integers(1, 10).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.lists(st.integers(1, k).flatmap(lambda v: st.sampled_from([v, -v])),
                      min_size=1, max_size=4), max_size=30),
    st.lists(st.integers(1, k).flatmap(lambda v: st.sampled_from([v, -v])), max_size=4)))


@settings(max_examples=400)
@given(cnf_st)
def test_matches_brute_force(data):
    k, clauses, assumptions = data
    m = MapSolver(k)
    for c in clauses:
        m.add_clause(c)
    for assume in ((), assumptions, ()):
        ok, model = m.solve(assume)
        assert ok == brute_sat(k, clauses, assume)
        if ok:
            assert len(model) == k
            true = set(model)
            assert all(a in true for a in assume)
            assert all(any(l in true for l in c) for c in clauses)


@settings(max_examples=200)
@given(cnf_st)
def test_monotone(data):
    k, clauses, _ = data
    m = MapSolver(k)
    was_sat = True
    for c in clauses:
        m.add_clause(c)
        now = m.solve()[0]
        assert not (now and not was_sat)
        was_sat = now


@settings(max_examples=200)
@given(cnf_st)
def test_pure_positive_in_every_mxm(data):
    k, clauses, _ = data
    m = MapSolver(k)
    for c in clauses:
        m.add_clause(c)
    pure = m.pure_positive()
    assert all(pure <= mm for mm in all_maximal_models(m))
    assert pure == {v for v in range(1, k + 1) if not any(-v in c for c in clauses)}


def test_larger_instance_terminates():
    # pigeonhole 5 into 4: unsatisfiable, needs real search
    k = 20
    var = lambda p, h: p * 4 + h + 1
    m = MapSolver(k)
    for p in range(5):
        m.add_clause([var(p, h) for h in range(4)])
    for h in range(4):
        for p, q in itertools.combinations(range(5), 2):
            m.add_clause([-var(p, h), -var(q, h)])
    assert m.solve() == (False, None)
