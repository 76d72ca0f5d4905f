import pytest

from hgmus.core import build_grouped
from hgmus.errors import HardConflict, NotUnsat
from hgmus.extract import deletion_mus, insertion_mus
from hgmus.generate import extraction_instance
from hgmus.ltur import CONSISTENT, LturEngine
from hgmus.oracle import all_muses

from conftest import loaded_engine, random_unsat_instances


@pytest.mark.parametrize("extract", [insertion_mus, deletion_mus])
def test_examples(extract, e1, e2, e3):
    assert all_muses(e2) == {frozenset({1, 2})}
    assert extract(loaded_engine(e2), e2, [1, 2]) == [1, 2]
    assert extract(loaded_engine(e3), e3, [1]) == [1]


def test_order_sensitivity_on_e1(e1):
    assert all_muses(e1) == {frozenset({1}), frozenset({2})}
    assert insertion_mus(loaded_engine(e1), e1, [1, 2]) == [1]
    assert deletion_mus(loaded_engine(e1), e1, [1, 2]) == [2]


@pytest.mark.parametrize("extract", [insertion_mus, deletion_mus])
def test_errors(extract):
    f = build_grouped([(-1,), ()], [[(1,)]], 1)
    with pytest.raises(HardConflict):
        extract(loaded_engine(f), f, [1])
    g = build_grouped([(-1, 2)], [[(1,)]], 2)
    eng = loaded_engine(g)
    with pytest.raises(NotUnsat):
        extract(eng, g, [1])
    assert eng.snapshot() == loaded_engine(g).snapshot()


def test_multi_clause_groups():
    f = build_grouped([(-4,)], [[(1,), (-1, 2)], [(-2, -3, 4)], [(3,)], [(5,)]], 5)
    assert all_muses(f) == {frozenset({1, 2, 3})}
    assert insertion_mus(loaded_engine(f), f, [1, 2, 3, 4]) == [1, 2, 3]
    assert deletion_mus(loaded_engine(f), f, [1, 2, 3, 4]) == [1, 2, 3]


def still_consistent(f, groups):
    eng = loaded_engine(f)
    return all(eng.push_clauses(f.group(g)) is CONSISTENT for g in groups)


@pytest.mark.parametrize("extract", [insertion_mus, deletion_mus])
def test_random_against_oracle(extract):
    for f in random_unsat_instances(120, seed=7):
        eng = loaded_engine(f)
        before = eng.snapshot()
        w0 = eng.work
        groups = list(f.group_ids())
        mus = extract(eng, f, groups)
        assert frozenset(mus) in all_muses(f)
        for g in mus:
            assert still_consistent(f, [h for h in mus if h != g])
        assert eng.snapshot() == before
        bound = len(mus) if extract is insertion_mus else f.k
        assert eng.work - w0 <= 4 * bound * f.size_lits


def test_insertion_cheaper_when_mus_small():
    f = extraction_instance(60)
    groups = list(f.group_ids())
    eng = loaded_engine(f)
    w0 = eng.work
    insertion_mus(eng, f, groups)
    w1 = eng.work
    deletion_mus(eng, f, groups)
    w2 = eng.work
    assert w1 - w0 < w2 - w1
