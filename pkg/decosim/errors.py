# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.


class DecosimError(Exception):
    """ base of all errors raised by decosim.

    `exit_code` is the status the command line returns when the error
    reaches `decosim.cli.main`.

    """
    exit_code = 1


class InvalidParameter(DecosimError, ValueError):
    exit_code = 2


class DimensionTooLarge(InvalidParameter):
    pass


class SingularAngle(InvalidParameter):
    pass


class DivideByZero(InvalidParameter, ZeroDivisionError):
    pass


class UnnormalizedWeights(InvalidParameter):
    pass


class UnnormalizedInput(InvalidParameter):
    pass


class DegenerateGroundState(InvalidParameter):
    pass


class DegenerateGroundStateWarning(UserWarning):
    pass


class NumericalFailure(DecosimError):
    exit_code = 3


class ConvergenceFailure(NumericalFailure):
    pass


class TooFewPeaks(NumericalFailure):
    pass


class DegenerateFit(NumericalFailure):
    pass


class ToleranceExceeded(DecosimError):
    exit_code = 1
