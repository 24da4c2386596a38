# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import os
from pydesign import Singleton
from poskit.common.common import Common
from poskit.common import generic
from poskit.common.kwargparse import KwargParse


# Environment variable overriding the dimension bound of cone duality.
MAX_CONE_DIM_ENV = 'POSKIT_MAX_CONE_DIM'


# ----------------------------------------------------------------------------------------------------------------------
# SETTINGS:
# Library wide configuration lives in one singleton. Values come from keyword arguments with defaults declared by a
# kwarg parser, environment variables win over configured values and are read again on every access.
# ----------------------------------------------------------------------------------------------------------------------
class Settings(Common, metaclass=Singleton):
    """
    Keep library wide settings.
    ---------
    @author:    Poskit Authors.
    @created:   4th October, 2026.
    """
    def __init__(self, **kwargs):
        """
        Class constructor.
        :param kwargs:  initial settings.
        """
        self.parser = self.kwargparser()
        self.args = self.parser.parse(None, **kwargs)

    def kwargparser(self) -> KwargParse:
        """
        Get keyword arguments parser.
        :return:        keyword arguments parser.
        """
        return KwargParse().add('max_cone_dim', None, 12, convert=self._positive)

    def update(self, **kwargs):
        """
        Change configured values. Unknown keys are refused.
        :param kwargs:  settings to be changed.
        :return:        settings itself as facade pattern.
        """
        unknown = set(kwargs) - set(self.parser.names())
        if unknown:
            raise self.input_error('unknown setting(s) %s. Try again with %s.' % (
                generic.content(sorted(unknown)), generic.content(self.parser.names(), end=' or ')))
        self.args = self.parser.parse(None, **dict(self.args, **kwargs))
        return self

    def reset(self):
        """
        Restore defaults.
        :return:        settings itself as facade pattern.
        """
        self.args = self.parser.parse(None)
        return self

    @property
    def max_cone_dim(self) -> int:
        env = os.environ.get(MAX_CONE_DIM_ENV)
        if env is not None and env.strip():
            return self._positive(env, MAX_CONE_DIM_ENV)
        return self.args['max_cone_dim']

    def _positive(self, value, what='max_cone_dim') -> int:
        value = generic.to_integer(value, what)
        if value < 1:
            raise self.input_error('%s must be positive, got %d.' % (what, value))
        return value
