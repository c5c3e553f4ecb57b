"""Exception hierarchy.

Every error raised on bad input derives from :class:`NilpatError`, which the
CLI maps to exit code 1.  :class:`FullIndexViolation` is different in kind: it
signals an internal contradiction and should never be observed.
"""


class NilpatError(Exception):
    pass


# parsing / file formats
class ParseError(NilpatError, ValueError):
    pass


class NonSquare(ParseError):
    pass


class MixedKinds(ParseError):
    pass


class BadToken(ParseError):
    pass


# shapes and kinds
class OrderMismatch(NilpatError, ValueError):
    pass


class KindMismatch(NilpatError, ValueError):
    pass


class DimMismatch(NilpatError, ValueError):
    pass


class NotSymmetric(NilpatError, ValueError):
    pass


class SingularMatrix(NilpatError, ValueError):
    pass


# constructions
class MTooSmall(NilpatError, ValueError):
    pass


class BlockOrderMismatch(NilpatError, ValueError):
    pass


class BadT(NilpatError, ValueError):
    pass


class OrderTooSmall(NilpatError, ValueError):
    pass


class BadDiagonals(NilpatError, ValueError):
    pass


class NotFullIndex(NilpatError):
    pass


class DescriptorError(NilpatError, ValueError):
    pass


# Nilpotent-Jacobian method
class TooFewNonzeros(NilpatError, ValueError):
    pass


class BadSelection(NilpatError, ValueError):
    pass


class BadCap(NilpatError, ValueError):
    pass


class NotNilpotent(NilpatError):
    def __init__(self, msg, first_nonzero_power=None):
        super().__init__(msg)
        self.first_nonzero_power = first_nonzero_power


class NotConformant(NilpatError):
    pass


class FullIndexViolation(AssertionError):
    """A nonsingular Jacobian was found at a nilpotent matrix of index < n.

    This cannot happen for a correct implementation; it is raised instead of
    returning a report so that the contradiction is impossible to ignore.
    """
