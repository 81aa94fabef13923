"""Exception types shared across the package.

Every error raised on a contract violation derives from OlsonOrderError so
callers can catch the whole family at one place (the CLI maps subfamilies to
exit codes).
"""

from __future__ import annotations


class OlsonOrderError(Exception):
    """Base class for all contract violations raised by this package."""


class InvalidAlgebra(OlsonOrderError):
    """Backend construction data violates the effect-algebra axioms."""


class CarrierTooLarge(OlsonOrderError):
    """A finite carrier exceeds the configured size cap."""


class ElementForeignToAlgebra(OlsonOrderError):
    """An element was used with a backend instance that does not own it."""


class NotEnumerable(OlsonOrderError):
    """The carrier cannot be exhaustively enumerated."""


class SetOutOfRange(OlsonOrderError):
    """A set literal mentions points outside the ground set."""


class NonIncreasingPoints(OlsonOrderError):
    """Spectrum points must be strictly increasing."""


class WeightsNotSummable(OlsonOrderError):
    """A running partial sum of weights is undefined or the total is not one."""


class MapUndefinedOnSpectrum(OlsonOrderError):
    """A piecewise map does not cover some spectrum point."""


class SpectrumOutsideUnitInterval(OlsonOrderError):
    """An operation restricted to [0,1]-supported observables got a wider one."""


class SpectrumTooLargeForSharpnessScan(OlsonOrderError):
    """The 2^k sharpness scan is capped; the spectrum exceeds the cap."""


class BackendMismatch(OlsonOrderError):
    """Observables from different backend instances cannot be combined."""


class EmptyFamily(OlsonOrderError):
    """Meets and joins require at least one observable."""


class NonMonotoneInput(OlsonOrderError):
    """Grid families fed to the regularizations must be monotone."""


class CertificationTooLarge(OlsonOrderError):
    """Exhaustive nonexistence certification would exceed the enumeration cap."""


class DomainMismatch(OlsonOrderError):
    """A function or kernel does not match the backend's ground set."""


class KernelValueOutsideTribe(OlsonOrderError):
    """A kernel induces a set function that leaves the tribe's carrier."""


class DimensionMismatch(OlsonOrderError):
    """Operator arguments must share one Hilbert-space dimension."""


class NotHermitian(OlsonOrderError):
    """Matrix input is not Hermitian within tolerance."""


class NotAnEffect(OlsonOrderError):
    """Operator spectrum is not within [0,1] up to tolerance."""


class NotAProjection(OlsonOrderError):
    """Operator is not idempotent Hermitian within tolerance."""


class EigendecompositionFailure(OlsonOrderError):
    """The eigensolver failed to converge or produced invalid output."""


class ParseError(OlsonOrderError):
    """Malformed JSON input for a backend, element, observable or matrix."""
