# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from __future__ import absolute_import
from .command import Command, CommandResult, EXIT_CODES, read_json
from .commands import COMMANDS, ModelCommand, FlagCommand, ToricCommand, ConeCommand, BlowupCommand, BundleCommand
from .main import build_parser, run, main
