# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

"""
Exceptions raised by the numerical modules. Each one derives from a builtin
exception so callers can still catch ValueError/ArithmeticError broadly.
"""


class ModelInputError(ValueError):
    """invalid input to a model or numerical operation"""


class ConfigurationError(ValueError):
    """numerical settings which can't be honored for the given model"""


class SheetDomainError(ValueError):
    """z lies on the wrong side of the real axis for the requested Riemann sheet"""


class BranchPointError(SheetDomainError):
    """z coincides with a branch point or a singularity of the continuation"""


class NotApplicableError(ValueError):
    """operation is not defined for this kind of model"""


class UnsupportedContinuationError(NotImplementedError):
    """analytic continuation is not available for a channel family"""


class NumericalToleranceError(ArithmeticError):

    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class DegeneracyError(ArithmeticError):

    def __init__(self, message, branches=None):
        super().__init__(message)
        self.branches = tuple(branches or ())


class NearDefectivePoleError(ArithmeticError):
    """1 - dω/dz vanishes at the pole, the residue is undefined"""


class ResolventConsistencyError(RuntimeError):
    """a result contradicts the first sheet no-pole property"""


class IntegrationAbortedError(ArithmeticError):

    def __init__(self, message, last_good_index=None):
        super().__init__(message)
        self.last_good_index = last_good_index


class FitRejectedError(ValueError):

    def __init__(self, reason, revival_time=None):
        super().__init__(reason)
        self.reason = reason
        self.revival_time = revival_time

# EOF
