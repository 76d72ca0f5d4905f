from hypothesis import given, settings, strategies as st

from hgmus.mapsolver import MapSolver
from hgmus.mxm import MxmState, maximal_model, update_sat
from hgmus.oracle import all_maximal_models


def map_with(k, *clauses):
    m = MapSolver(k)
    for c in clauses:
        m.add_clause(c)
    return m


def test_empty_q_uses_pure_literals_only():
    m = map_with(2)
    res = maximal_model(m)
    assert res.status and res.P == {1, 2}
    assert res.calls == 1


def test_exclusive_pair():
    m = map_with(2, [1, 2], [-1, -2])
    assert all_maximal_models(m) == {frozenset({1}), frozenset({2})}
    res = maximal_model(m)
    assert res.status and res.P in ({1}, {2})


def test_unsat_q():
    res = maximal_model(map_with(1, [1], [-1]))
    assert not res.status and res.P == frozenset()


def test_update_sat():
    s = MxmState(frozenset(), frozenset({1, 2}))
    assert update_sat([1, 2], s) == MxmState(frozenset({1, 2}), frozenset())
    assert update_sat([1, -2], s) == MxmState(frozenset({1}), frozenset({2}))
    empty = MxmState(frozenset({1}), frozenset(), frozenset({-2}))
    assert update_sat([1, 2], empty) == empty


def test_pluggable_selection():
    m = map_with(3, [-1, -2], [-2, -3])
    res = maximal_model(m, select=max)
    assert res.P in all_maximal_models(m)


cnf_st = st.integers(1, 12).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.lists(st.integers(1, k).flatmap(lambda v: st.sampled_from([v, -v])),
                      min_size=1, max_size=4), max_size=25)))


@settings(max_examples=300)
@given(cnf_st)
def test_mxm_contract(data):
    k, clauses = data
    m = map_with(k, *clauses)
    pure = m.pure_positive()
    before = m.calls
    res = maximal_model(m)
    assert m.calls - before == res.calls <= k - len(pure) + 1
    oracle = all_maximal_models(m)
    assert res.status == bool(oracle)
    if res.status:
        assert res.P in oracle
        assert pure <= res.P
        assert m.solve(sorted(res.P))[0]
        for v in set(range(1, k + 1)) - res.P:
            assert not m.solve(sorted(res.P) + [v])[0]
