"""Exception hierarchy.  Every error that concerns a concrete element tuple
carries it in ``witness``."""


class SnaLabError(Exception):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownElement(SnaLabError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class LatticeError(SnaLabError):
    pass


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class NotBounded(LatticeError):
    pass


class NotASublattice(SnaLabError):
    pass


class NoMaximum(SnaLabError):
    pass


class UnboundVariable(SnaLabError):
    pass


class TermSyntaxError(SnaLabError):
    pass


class PreconditionFailed(SnaLabError):
    """An operation was called on an algebra outside its domain
    (e.g. a suite that needs an SNA got something that fails the axioms)."""


class VerificationError(SnaLabError):
    """A postcondition that the theory guarantees did not hold."""


class NotAHomomorphism(SnaLabError):
    pass


class NotASubalgebra(SnaLabError):
    pass


class NotSubresiduatedFilter(SnaLabError):
    pass


class NotOpenImplicative(SnaLabError):
    pass


class NotACongruence(SnaLabError):
    pass


class EmptyGeneratorSet(SnaLabError):
    pass


class TooLarge(SnaLabError):
    pass


class TrivialAlgebra(SnaLabError):
    pass


class IdentityNotSatisfied(SnaLabError):
    pass


class NotInVariety(SnaLabError):
    pass


class MultipleFixedPoints(SnaLabError):
    pass


class NoCenter(SnaLabError):
    pass


class NotATwist(SnaLabError):
    pass


class ParseError(SnaLabError):
    pass


class ValidationError(SnaLabError):
    pass
