"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class ArrangementError(Exception):
    exit_code = 1


class InvalidArrangement(ArrangementError):
    """Duplicate lines, too few or too many lines."""

    exit_code = 1


class HypothesisViolation(ArrangementError):
    """The arrangement has a point of multiplicity >= 4."""

    exit_code = 2


class NotAPencil(ArrangementError):
    exit_code = 2


class DegeneratePencil(NotAPencil):
    """Products are dependent but the base locus or the T-partition is wrong."""


class ArrangementParseError(ArrangementError):
    exit_code = 3


class ParameterRejected(ArrangementError):
    exit_code = 4
