# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from poskit.common.errors import InputError, RefusedError, InternalError


class Common:
    """
    Provide common functions for other inherited classes.
    ---------
    @author:    Poskit Authors.
    @created:   3rd October, 2026.
    """
    def message(self, message):
        """
        Generate message string with classname itself.
        :param message:     input message.
        :return:            message with classname.
        """
        return '(%s): %s' % (self.__class__.__name__, message)

    def input_error(self, message) -> InputError:
        """
        Build an input error whose message names this class.
        :param message:     what is wrong with the input.
        :return:            input error, ready to be raised.
        """
        return InputError(self.message(message))

    def refused(self, message, hypothesis) -> RefusedError:
        """
        Build a refusal citing the violated hypothesis.
        :param message:     what was asked for.
        :param hypothesis:  the hypothesis that does not hold.
        :return:            refusal, ready to be raised.
        """
        return RefusedError(self.message('%s Refused: %s' % (message, hypothesis)), hypothesis=hypothesis)

    def internal_error(self, message) -> InternalError:
        """
        Build an internal consistency error.
        :param message:     the broken consistency check.
        :return:            internal error, ready to be raised.
        """
        return InternalError(self.message(message))
