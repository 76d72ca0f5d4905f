"""Group-oriented DIMACS (GCNF) reading and writing, plus result lines.

Input::

    c comment
    p gcnf <vars> <clauses> <groups>
    {0} -1 3 0
    {1} 1 0

Group 0 is hard.  A clause may span several lines; it ends at ``0``.

Output, one line per result and a closing summary::

    U 1 2 0
    C 1 0
    s STATS mus=1 mcs=1 iters=2 time=0.000
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import GroupedFormula, build_grouped, validate_horn
from .errors import (
    EmptyClauseInGroup,
    GcnfSyntaxError,
    HeaderMismatch,
    NonHornClause,
    TautologicalClause,
    UnknownGroup,
)

_GROUP = re.compile(r"\{(\d+)\}$")


@dataclass(frozen=True)
class GcnfDocument:
    num_vars: int
    num_clauses: int
    num_groups: int
    clauses: tuple  # of (group_id, literal tuple)
    lines: tuple = field(default=(), compare=False, repr=False)


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        for tok in stripped.split():
            yield lineno, tok


def read_document(text: str) -> GcnfDocument:
    """Syntactic pass: header, group tags and literal lists."""
    toks = _tokens(text)
    header = []
    for lineno, tok in toks:
        header.append(tok)
        if len(header) == 5:
            break
    if len(header) < 5 or header[:2] != ["p", "gcnf"]:
        raise GcnfSyntaxError("expected header 'p gcnf <vars> <clauses> <groups>'", 1)
    try:
        nv, nc, ng = (int(x) for x in header[2:])
    except ValueError:
        raise GcnfSyntaxError("non-integer value in header", lineno) from None
    if min(nv, nc, ng) < 0:
        raise GcnfSyntaxError("negative value in header", lineno)

    clauses, lines = [], []
    group, lits, start = None, [], None
    for lineno, tok in toks:
        if group is None:
            m = _GROUP.match(tok)
            if not m:
                raise GcnfSyntaxError(f"expected group tag, got {tok!r}", lineno)
            group, start = int(m.group(1)), lineno
            if group > ng:
                raise UnknownGroup(f"group {group} exceeds declared {ng}", lineno)
            continue
        try:
            lit = int(tok)
        except ValueError:
            raise GcnfSyntaxError(f"bad literal {tok!r}", lineno) from None
        if lit == 0:
            clauses.append((group, tuple(dict.fromkeys(lits))))
            lines.append(start)
            group, lits = None, []
        elif abs(lit) > nv:
            raise HeaderMismatch(f"variable {abs(lit)} exceeds declared {nv}", lineno)
        else:
            lits.append(lit)
    if group is not None:
        raise GcnfSyntaxError("clause not terminated by 0", start)
    if len(clauses) != nc:
        raise HeaderMismatch(f"header declares {nc} clauses, found {len(clauses)}")
    used = {g for g, _ in clauses}
    missing = [g for g in range(1, ng + 1) if g not in used]
    if missing:
        raise HeaderMismatch(f"group {missing[0]} has no clauses")
    return GcnfDocument(nv, nc, ng, tuple(clauses), tuple(lines))


def to_formula(doc: GcnfDocument) -> GroupedFormula:
    hard, groups = [], [[] for _ in range(doc.num_groups)]
    lines = doc.lines or (None,) * len(doc.clauses)
    for i, ((g, lits), line) in enumerate(zip(doc.clauses, lines)):
        try:
            validate_horn([lits], allow_empty=g == 0, offset=i)
        except (NonHornClause, TautologicalClause, EmptyClauseInGroup) as e:
            raise type(e)(i, line) from None
        (hard if g == 0 else groups[g - 1]).append(lits)
    return build_grouped(hard, groups, doc.num_vars)


def parse_gcnf(text: str) -> GroupedFormula:
    return to_formula(read_document(text))


def load_gcnf(path) -> GroupedFormula:
    with open(path) as fh:
        return parse_gcnf(fh.read())


def write_gcnf(f: GroupedFormula) -> str:
    """Canonical text: hard clauses first, then groups 1..k in order."""
    flat = f.flatten()
    out = [f"p gcnf {f.num_vars} {len(flat)} {f.k}"]
    out += [" ".join([f"{{{g}}}", *map(str, lits), "0"]) for g, lits in flat]
    return "\n".join(out) + "\n"


def format_result(kind: str, ids) -> str:
    tag = {"MUS": "U", "MCS": "C"}[kind]
    return " ".join([tag, *map(str, sorted(ids)), "0"])


def format_stats(mus: int, mcs: int, iters: int, elapsed: float) -> str:
    return f"s STATS mus={mus} mcs={mcs} iters={iters} time={elapsed:.3f}"

