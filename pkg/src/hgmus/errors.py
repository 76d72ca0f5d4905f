"""Exception hierarchy shared by the solver, the parser and the CLI."""


class HgmusError(Exception):
    """Base class for every error raised by this package."""


class InputError(HgmusError):
    """Malformed or semantically invalid input formula."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GcnfSyntaxError(InputError):
    pass


class HeaderMismatch(InputError):
    pass


class UnknownGroup(InputError):
    pass


class NonHornClause(InputError):
    """A clause with two or more positive literals.

    ``index`` is the position of the clause in the sequence handed to
    :func:`hgmus.core.validate_horn`; the parser additionally fills ``line``.
    """

    def __init__(self, index, line=None):
        self.index = index
        super().__init__(f"clause {index} is not Horn", line)


class TautologicalClause(InputError):
    def __init__(self, index, line=None):
        self.index = index
        super().__init__(f"clause {index} contains a literal and its negation", line)


class EmptyClauseInGroup(InputError):
    def __init__(self, index, line=None):
        self.index = index
        super().__init__(f"clause {index} of a soft group is empty", line)


class NoGroups(InputError):
    pass


class CalledInConflict(HgmusError):
    """push_clauses on an engine that already holds a conflict."""


class StaleCheckpoint(HgmusError):
    pass


class OutOfRangeSelector(HgmusError):
    pass


class HardConflict(HgmusError):
    """The hard group G0 alone is unsatisfiable."""


class NotUnsat(HgmusError):
    """The candidate groups never produced a conflict."""


class HardUnsat(HgmusError):
    """Enumeration refused: the hard clauses are unsatisfiable on their own."""


class TotallySat(HgmusError):
    """Enumeration refused: the whole formula is satisfiable."""


class BudgetExhausted(HgmusError):
    """A cap or the time budget stopped enumeration early.

    ``stats`` holds the counters accumulated up to that point.
    """

    def __init__(self, stats, reason):
        self.stats = stats
        self.reason = reason
        super().__init__(f"budget exhausted ({reason})")


class TooLarge(HgmusError):
    """Instance exceeds the brute-force oracle limits."""


class ValidationFailed(HgmusError):
    pass
