"""Exception hierarchy.  Every input problem is a ``SymprodError``."""


class SymprodError(ValueError):
    pass


class AllZero(SymprodError):
    pass


class AmbientMismatch(SymprodError):
    pass


class DimensionMismatch(SymprodError):
    pass


class BadIndex(SymprodError, IndexError):
    pass


class NotCertified(SymprodError):
    pass


class TooLarge(SymprodError):
    pass


class BadParams(SymprodError):
    pass


class InconsistentProfile(SymprodError):
    pass


class MissingGonality(SymprodError):
    pass


class BadInput(SymprodError):
    pass


class NoCertificate(SymprodError):
    pass


class AdvisoryWarning(UserWarning):
    """A result was computed outside the hypotheses that make it a theorem."""
