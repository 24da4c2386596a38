# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from __future__ import absolute_import
from .common import Common
from .kwargparse import KwargParse
from .report import ValidationReport, Violation
from .settings import Settings, MAX_CONE_DIM_ENV
from .errors import PoskitError, InputError, RefusedError, InternalError
