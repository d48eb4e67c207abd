"""Exception hierarchy shared by every lcseq module."""


class LCSeqError(Exception):
    """Base class for all errors raised by lcseq."""


class NegativeTerm(LCSeqError, ValueError):
    pass


class NegativeHead(LCSeqError, ValueError):
    pass


class ZeroSequenceError(LCSeqError, ValueError):
    """Head and tail indices are undefined for the zero sequence."""


class LengthMismatch(LCSeqError, ValueError):
    pass


class NotInL(LCSeqError, ValueError):
    """A relation was requested on a sequence that is not log-concave
    without internal zeros."""


class PremiseFails(LCSeqError):
    """The hypothesis of a theorem verifier does not hold for the input."""


class ParseError(LCSeqError, ValueError):
    pass


class WindowTooLarge(LCSeqError, ValueError):
    """A brute-force window exceeds the LCSEQ_MAX_WINDOW safety cap."""
