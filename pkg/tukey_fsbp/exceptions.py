# coding=utf-8
"""Custom exceptions defined by Tukey FSBP."""


class TukeyFsbpError(Exception):
    """A base class for all exceptions defined by Tukey FSBP."""


class EmptySample(TukeyFsbpError):
    """A sample with no points was given."""


class DimensionError(TukeyFsbpError):
    """Points or directions of different dimensions were combined."""


class UnsupportedDimension(DimensionError):
    """The requested exact computation is not available in this dimension."""


class NotInGeneralPosition(TukeyFsbpError):
    """The sample has more than ``d`` points on some hyperplane."""


class DegenerateSubset(TukeyFsbpError):
    """A ``d``-subset of the sample is affinely dependent."""


class SampleTooSmall(TukeyFsbpError):
    """The sample has too few points for the requested computation."""


class ExhaustedCandidates(TukeyFsbpError):
    """Every seeded candidate direction lay on some data hyperplane normal."""


class InexactCertificate(TukeyFsbpError):
    """An exact certificate is needed but only an upper bound is available."""


class InvalidPlan(TukeyFsbpError):
    """A contamination plan violates its invariants."""


class Lemma3Unverified(TukeyFsbpError):
    """No candidate point passed the escape-point verification."""


class NoBreakdownWithinBudget(TukeyFsbpError):
    """The constructed attack did not break the median within ``max_m`` copies."""


class ParseError(TukeyFsbpError):
    """A dataset could not be parsed.

    :param message: A description of the problem.
    :param row: The zero-based row of the offending entry, if known.
    :param column: The zero-based column of the offending entry, if known.
    """

    def __init__(self, message, row=None, column=None):
        """Remember where the problem was found."""
        if row is not None:
            message = '{} (row {}, column {})'.format(message, row, column)
        super().__init__(message)
        self.row = row
        self.column = column


class DimensionMismatch(ParseError):
    """Rows of a dataset disagree on the dimension."""


class InvalidGenerator(TukeyFsbpError):
    """An unknown dataset generator or invalid generator parameters."""
