# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from __future__ import absolute_import
from .model import CurveRecord, DivisorClass, VarietyModel, validate_model, intersect, nef_check_linebundle, \
    ample_check_linebundle, seshadri_line, seshadri_ratios, seshadri_at_divisor_sink
from .flag import CartanType, build_flag_model, build_projective_space_model
from .toric import Fan, Wall, ToricDivisor, validate_fan, enumerate_walls, divisor_degree_on_wall, divisor_degrees, \
    nef_check_toric, fixed_point_walls, seshadri_toric_fixed_point, intersection_numbers_by_linear_equivalence
from .blowup import BlowupModel, build_blowup, blowup_nef_generators, blowup_mori_generators, is_nef_on_blowup, \
    seshadri_via_blowup, pair, divisor_vector, negative_curves, decompose_nef_class, curves_to_divisor_dual, \
    divisor_dual_to_curves
from .bundles import SplittingData, validate_splitting, nef_check_bundle, ample_check_bundle, seshadri_bundle
