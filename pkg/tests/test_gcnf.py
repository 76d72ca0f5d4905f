import pytest
from hypothesis import given, settings, strategies as st

from hgmus.errors import GcnfSyntaxError, HeaderMismatch, NonHornClause, UnknownGroup
from hgmus.gcnf import format_result, format_stats, parse_gcnf, read_document, write_gcnf
from hgmus.generate import gen_random

E1_TEXT = "p gcnf 3 5 2\n{0} -1 3 0\n{0} -2 3 0\n{0} -3 0\n{1} 1 0\n{2} 2 0\n"


def test_parse_e1(e1):
    assert parse_gcnf(E1_TEXT) == e1


def test_parse_e3(e3):
    assert parse_gcnf("p gcnf 1 2 1\n{0} -1 0\n{1} 1 0\n") == e3


def test_non_horn():
    with pytest.raises(NonHornClause) as exc:
        parse_gcnf("p gcnf 2 1 1\n{1} 1 2 0\n")
    assert exc.value.line == 2


def test_comments_and_multiline():
    text = "c hello\np gcnf 3 2 1\n{0} -1\n  -2 3 0\nc mid\n{1} 1 0\n"
    f = parse_gcnf(text)
    assert f.hard[0].literals == (-1, -2, 3)


@pytest.mark.parametrize("text, err", [
    ("p cnf 1 1\n1 0\n", GcnfSyntaxError),
    ("p gcnf 1 1 1\n1 0\n", GcnfSyntaxError),
    ("p gcnf 1 1 1\n{1} 1\n", GcnfSyntaxError),
    ("p gcnf 1 1 1\n{1} x 0\n", GcnfSyntaxError),
    ("p gcnf 1 2 1\n{1} 1 0\n", HeaderMismatch),
    ("p gcnf 1 1 1\n{1} 2 0\n", HeaderMismatch),
    ("p gcnf 1 1 2\n{1} 1 0\n", HeaderMismatch),
    ("p gcnf 1 1 1\n{2} 1 0\n", UnknownGroup),
])
def test_errors(text, err):
    with pytest.raises(err):
        parse_gcnf(text)


def test_error_line_numbers():
    with pytest.raises(UnknownGroup) as exc:
        parse_gcnf("c x\np gcnf 1 2 1\n{1} 1 0\n{3} 1 0\n")
    assert exc.value.line == 4


def test_format():
    assert format_result("MUS", {2, 1}) == "U 1 2 0"
    assert format_result("MCS", (1, 2)) == "C 1 2 0"
    assert format_result("MCS", ()) == "C 0"
    assert format_stats(2, 1, 3, 0.01234).startswith("s STATS mus=2 mcs=1 iters=3 time=")


def test_write_e1(e1):
    assert write_gcnf(e1) == E1_TEXT


@settings(max_examples=100)
@given(st.integers(1, 10), st.integers(1, 10), st.floats(0, 1), st.integers(0, 10**6))
def test_roundtrip(k, extra, density, seed):
    f = gen_random(k + extra, k, density, seed)
    text = write_gcnf(f)
    assert parse_gcnf(text) == f
    assert write_gcnf(parse_gcnf(text)) == text


def test_document_fields():
    doc = read_document(E1_TEXT)
    assert (doc.num_vars, doc.num_clauses, doc.num_groups) == (3, 5, 2)
    assert doc.clauses[3] == (1, (1,))
