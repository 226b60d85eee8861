"""Exception hierarchy shared by every hypgen module."""


class HypgenError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(HypgenError):
    """A zero list was empty."""


class ZeroAtOrigin(HypgenError):
    """A polynomial was given a zero at the origin (P(0), Q(0) must be nonzero)."""


class DomainError(HypgenError):
    """An argument fell outside the operation's domain."""


class PoleError(HypgenError):
    """Evaluation was requested at (or too close to) a pole."""


class BracketError(HypgenError):
    """A bisection bracket did not have the expected endpoint signs."""


class NonConvergence(HypgenError):
    """An iterative method exhausted its budget without meeting tolerance."""


class MultipleRootError(HypgenError):
    """Root clustering was detected where simple roots are required."""


class MonotonicityViolation(HypgenError):
    """A quantity that must increase strictly along a sweep failed to."""


class HypothesisError(HypgenError):
    """An operation that requires the verified hypotheses was called on a
    parameter set that fails them."""
