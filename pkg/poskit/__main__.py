# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import sys
from poskit.cli.main import main


sys.exit(main())
