# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union
from poskit.common import Common, ValidationReport, InputError
from poskit.common import generic
from poskit.variety.model import VarietyModel, DivisorClass, require_valid, intersect
from poskit.variety.toric import Fan, ToricDivisor, enumerate_walls, fixed_point_walls, divisor_degree_on_wall


logger = logging.getLogger(__name__)


NEF_HYPOTHESIS = 'Seshadri constants are defined for nef bundles; a splitting degree is negative.'
AMPLE_TORIC_HYPOTHESIS = 'the ampleness criterion on B-stable curves holds on normal simple G-projective ' \
                         'varieties; on a fan only nefness (torus-stable curves) is available.'
BUNDLE_FIELDS = ('rank', 'c1', 'per_curve')


@dataclass(frozen=True)
class SplittingData(Common):
    """
    Equivariant vector bundle presented by its splitting type O(a_1(C)) + ... + O(a_n(C)) on every invariant curve
    and its first Chern class. Degrees are kept sorted, so the lists behave as multisets.
    ---------
    @author:    Poskit Authors.
    @created:   14th October, 2026.
    """
    rank: int
    c1: Tuple[int, ...]
    per_curve: Tuple[Tuple[str, Tuple[int, ...]], ...]

    def __post_init__(self):
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 1:
            raise self.input_error('rank must be a positive integer, got %r.' % (self.rank,))
        items = self.per_curve.items() if isinstance(self.per_curve, dict) else self.per_curve
        per_curve = tuple(sorted((str(name), tuple(sorted(degrees))) for name, degrees in items))
        object.__setattr__(self, 'c1', tuple(self.c1))
        object.__setattr__(self, 'per_curve', per_curve)

    @property
    def degrees(self) -> Dict[str, Tuple[int, ...]]:
        return dict(self.per_curve)

    @property
    def all_degrees(self) -> Tuple[int, ...]:
        return tuple(a for _, degrees in self.per_curve for a in degrees)

    @classmethod
    def from_json(cls, obj):
        """
        Read {"rank", "c1", "per_curve": {"C1": [...], ...}}; unknown fields are rejected.
        :param obj: json object.
        :return:    splitting data, not validated against a model yet.
        """
        if not isinstance(obj, dict):
            raise InputError('(SplittingData): bundle must be a json object.')
        unknown = sorted(set(obj) - set(BUNDLE_FIELDS))
        if unknown:
            raise InputError('(SplittingData): unknown field(s) %s.' % generic.content(unknown))
        missing = [k for k in BUNDLE_FIELDS if k not in obj]
        if missing:
            raise InputError('(SplittingData): missing field(s) %s.' % generic.content(missing))
        if not generic.isinstances(obj['rank'], int, nested=False):
            raise InputError('(SplittingData): rank must be an integer.')
        if not generic.isvector(obj['c1'], int):
            raise InputError('(SplittingData): c1 must be a list of integers.')
        per_curve = obj['per_curve']
        if not isinstance(per_curve, dict) or not generic.isvector(list(per_curve.values()), int, depth=2):
            raise InputError('(SplittingData): per_curve must map curve names to lists of integers.')
        return cls(obj['rank'], tuple(obj['c1']), per_curve)

    def to_json(self) -> dict:
        # per_curve is stored as sorted pairs.
        return {'rank': self.rank, 'c1': list(self.c1), 'per_curve': {k: list(v) for k, v in self.per_curve}}


Space = Union[VarietyModel, Fan]


def _curves(space: Space) -> Dict[str, object]:
    """
    Invariant curves of the attached space by name: curve records of a model, walls of a fan.
    """
    if isinstance(space, Fan):
        return {w.name: w for w in enumerate_walls(space)}
    require_valid(space)
    return {c.name: c for c in space.curves}


def _c1_degree(space: Space, S: SplittingData, curve):
    if isinstance(space, Fan):
        return divisor_degree_on_wall(space, ToricDivisor(S.c1), curve)
    return intersect(space, DivisorClass(S.c1), curve)


def validate_splitting(space: Space, S: SplittingData) -> ValidationReport:
    """
    Check coverage (n degrees on every curve, no unknown curves) and c1 compatibility sum_j a_j(C) = c1.C.
    :param space:   variety model or fan the bundle lives on.
    :param S:       splitting data.
    :return:        validation report.
    """
    report = ValidationReport('bundle', ['c1', 'coverage', 'consistency'])
    curves = _curves(space)
    expected = len(space.rays) if isinstance(space, Fan) else space.rank
    if len(S.c1) != expected:
        return report.add('c1', 'c1', 'has %d coefficients, expected %d' % (len(S.c1), expected))
    degrees = S.degrees
    for name in sorted(set(degrees) - set(curves)):
        report.add('coverage', name, 'is not an invariant curve of the space')
    for name, curve in sorted(curves.items()):
        if name not in degrees:
            report.add('coverage', name, 'has no splitting type')
            continue
        if len(degrees[name]) != S.rank:
            report.add('coverage', name, '%d degrees for a rank %d bundle' % (len(degrees[name]), S.rank))
            continue
        total, c1 = sum(degrees[name]), _c1_degree(space, S, curve)
        if total != c1:
            report.add('consistency', name, 'degrees sum to %d but c1.%s = %s' % (total, name, c1))
    return report


def nef_check_bundle(space: Space, S: SplittingData) -> bool:
    """
    A bundle is nef iff every summand of every splitting type has non-negative degree.
    :param space:   variety model or fan.
    :param S:       splitting data.
    :return:        true or false.
    """
    validate_splitting(space, S).raise_for_violations()
    return all(a >= 0 for a in S.all_degrees)


def ample_check_bundle(space: Space, S: SplittingData) -> bool:
    """
    A bundle on a simple G-variety is ample iff every summand of every splitting type has degree at least one.
    :param space:   variety model.
    :param S:       splitting data.
    :return:        true or false.
    """
    if isinstance(space, Fan):
        raise space.refused('ampleness of a bundle on a fan asked.', AMPLE_TORIC_HYPOTHESIS)
    validate_splitting(space, S).raise_for_violations()
    return all(a >= 1 for a in S.all_degrees)


def seshadri_bundle(space: Space, S: SplittingData, cone: Optional[int] = None) -> Fraction:
    """
    Seshadri constant of a nef bundle at the sink: smallest degree over the curves through it. On a fan the
    point is the fixed point of a maximal cone and the curves are its incident walls.
    :param space:   variety model or fan.
    :param S:       nef splitting data.
    :param cone:    index of maximal cone, fans only.
    :return:        exact rational.
    """
    if isinstance(space, Fan):
        if cone is None:
            raise space.input_error('a maximal cone must be given to locate the fixed point.')
        names = [w.name for w in fixed_point_walls(space, cone)]
    else:
        if cone is not None:
            raise space.input_error('cone selection applies to fans only.')
        names = [c.name for c in require_valid(space).sink_curves]
    if not nef_check_bundle(space, S):
        logger.debug('seshadri_bundle refused, degrees %s', S.degrees)
        raise S.refused('Seshadri constant of a bundle asked.', NEF_HYPOTHESIS)
    degrees = S.degrees
    return Fraction(min(a for name in names for a in degrees[name]))
