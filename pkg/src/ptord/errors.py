"""Exception types shared across the package.

Each class carries the process exit code the command-line front end reports.
"""


class PtordError(Exception):
    exit_code = 1


class InputError(PtordError, ValueError):
    """A precondition on user-supplied data failed."""

    exit_code = 2


class DefectTableMiss(PtordError, LookupError):
    """No row of the semistability-defect table matches a curve."""

    exit_code = 3

    def __init__(self, ell, triple, message=None):
        self.ell = ell
        self.triple = triple
        shown = tuple("inf" if v == float("inf") else v for v in triple)
        super().__init__(
            message
            or f"defect-table-miss: no entry for ell={ell}, (v(c4), v(c6), v(Delta))={shown}; "
            "supply the defect explicitly"
        )


class ResourceLimit(PtordError, RuntimeError):
    """A configured size ceiling would be exceeded."""

    exit_code = 4


class ConsistencyError(PtordError, AssertionError):
    """An internal cross-check failed; indicates a bug or inconsistent inputs."""

    exit_code = 5
