"""Exception hierarchy shared across the package.

Pack problems (bad rule files, unresolvable resources) and input problems
(malformed TSV, broken XML) are kept apart so the CLI can map them to
distinct exit codes.
"""


class TemponymError(Exception):
    """Base class for all errors raised by this package."""


class PackError(TemponymError):
    """A rule pack is malformed or internally inconsistent.

    Carries an optional source location so authors can find the offending
    line.
    """

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:" if line is None else f"{path}:{line}:"
            prefix += " "
        super().__init__(prefix + message)


class ResourceCycleError(PackError):
    """Pattern resources reference each other in a cycle."""


class ResourceLimitError(PackError):
    """An interpolated pattern exceeded the expansion size limit."""


class DanglingReferenceError(PackError):
    """A template references a resource that does not exist."""


class NormalizationError(TemponymError):
    """A surviving match could not be normalized (pack bug, fails loud)."""


class InputError(TemponymError):
    """User-supplied input (TSV, TimeML, record stream) is malformed."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:" if line is None else f"{path}:{line}:"
            prefix += " "
        super().__init__(prefix + message)
