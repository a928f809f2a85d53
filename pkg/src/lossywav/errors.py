"""Exception hierarchy.

Everything raised on bad input derives from :class:`LossyWavError`, so callers
can catch one type. :class:`FormatError` covers malformed or unsupported files
(CLI exit code 2) and :class:`ParameterError` covers bad codec options (exit 3).
"""


class LossyWavError(ValueError):
    pass


class FormatError(LossyWavError):
    pass


class ParameterError(LossyWavError):
    pass


class MissingRiffMagic(FormatError):
    pass


class MissingWaveTag(FormatError):
    pass


class MissingChunk(FormatError):
    pass


class Truncated(FormatError):
    pass


class UnsupportedFormat(FormatError):
    pass


class InvariantViolation(FormatError):
    pass


class TruncatedRun(FormatError):
    pass


class PayloadTooShort(FormatError):
    pass


class NotCompressed(FormatError):
    pass


class BadVersion(FormatError):
    pass


class BitsOutOfRange(ParameterError):
    pass


class InvalidSilenceParams(ParameterError):
    pass


class EmptyInput(ParameterError):
    pass
