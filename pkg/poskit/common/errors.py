# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------


class PoskitError(Exception):
    """
    Base error of the library. Every error knows the command status and exit code it maps to.
    ---------
    @author:    Poskit Authors.
    @created:   3rd October, 2026.
    """
    status = 'internal_error'
    exit_code = 4


class InputError(PoskitError, ValueError):
    """
    Input is malformed or inconsistent with its own invariants.
    """
    status = 'input_error'
    exit_code = 2


class RefusedError(PoskitError):
    """
    Input is well formed but a hypothesis of the underlying theorem does not hold.
    """
    status = 'refused'
    exit_code = 3

    def __init__(self, message, hypothesis=None):
        super(RefusedError, self).__init__(message)
        self.hypothesis = hypothesis


class InternalError(PoskitError, RuntimeError):
    """
    A consistency check failed that cannot fail on valid input.
    """
    status = 'internal_error'
    exit_code = 4
