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
from dataclasses import dataclass, field
from typing import Dict, Tuple
from poskit.common import Common, ValidationReport, InputError
from poskit.common import generic


logger = logging.getLogger(__name__)


# Hypotheses cited by refusals.
AMPLE_HYPOTHESIS = 'the Seshadri constant at the sink is computed for ample line bundles only ' \
                   '(all coefficients a_i >= 1 in the D_i basis).'
MODEL_FIELDS = ('name', 'rank', 'divisors', 'curves')
CURVE_FIELDS = ('name', 'class', 'distinguished', 'through_sink', 'mult_at_sink')


@dataclass(frozen=True)
class CurveRecord(Common):
    """
    A B-stable curve given by its class in N_1(X), written in the basis of distinguished curves C_1...C_r.
    ---------
    @author:    Poskit Authors.
    @created:   5th October, 2026.
    """
    name: str
    class_vector: Tuple[int, ...]
    distinguished: bool = False
    through_sink: bool = True
    mult_at_sink: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'class_vector', tuple(self.class_vector))

    @classmethod
    def from_json(cls, obj):
        """
        Read a curve record, unknown fields are rejected.
        :param obj: json object.
        :return:    curve record.
        """
        if not isinstance(obj, dict):
            raise InputError('(CurveRecord): curve must be an object, got %r.' % (obj,))
        unknown = sorted(set(obj) - set(CURVE_FIELDS))
        if unknown:
            raise InputError('(CurveRecord): unknown field(s) %s.' % generic.content(unknown))
        if 'name' not in obj or 'class' not in obj:
            raise InputError('(CurveRecord): fields name and class are required.')
        if not isinstance(obj['name'], str):
            raise InputError('(CurveRecord): name must be a string.')
        if not generic.isvector(obj['class'], int):
            raise InputError('(CurveRecord): class of %s must be a list of integers.' % obj['name'])
        for flag in ('distinguished', 'through_sink'):
            if flag in obj and not isinstance(obj[flag], bool):
                raise InputError('(CurveRecord): %s of %s must be boolean.' % (flag, obj['name']))
        mult = obj.get('mult_at_sink', 1)
        if not generic.isinstances(mult, int, nested=False):
            raise InputError('(CurveRecord): mult_at_sink of %s must be an integer.' % obj['name'])
        return cls(obj['name'], tuple(obj['class']), obj.get('distinguished', False),
                   obj.get('through_sink', True), mult)

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'class': list(self.class_vector),
            'distinguished': self.distinguished,
            'through_sink': self.through_sink,
            'mult_at_sink': self.mult_at_sink,
        }


@dataclass(frozen=True)
class DivisorClass(Common):
    """
    Line bundle L = sum a_i D_i given by its coefficients in the basis of boundary divisors.
    ---------
    @author:    Poskit Authors.
    @created:   5th October, 2026.
    """
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(generic.simplify(generic.to_fraction(a)) for a in self.coeffs))

    @classmethod
    def parse(cls, text):
        """
        Read coefficients like '3,1,2' or '1/2,1'.
        :param text:    comma separated coefficients or a list.
        :return:        divisor class.
        """
        return cls(generic.parse_vector(text))

    def __len__(self):
        return len(self.coeffs)

    def to_json(self) -> list:
        return [a if isinstance(a, int) else generic.rational_to_json(a) for a in self.coeffs]


@dataclass(frozen=True)
class VarietyModel(Common):
    """
    Combinatorial model of a nonsingular simple G-projective variety: Picard rank r, boundary divisors D_1...D_r
    and the finite list of B-stable curves, all of them passing through the sink x^-.
    ---------
    @author:    Poskit Authors.
    @created:   5th October, 2026.
    """
    name: str
    rank: int
    divisor_labels: Tuple[str, ...]
    curves: Tuple[CurveRecord, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'divisor_labels', tuple(self.divisor_labels))
        object.__setattr__(self, 'curves', tuple(self.curves))

    def curve(self, name) -> CurveRecord:
        """
        Look up a curve by name.
        :param name:    curve name.
        :return:        curve record.
        """
        for curve in self.curves:
            if curve.name == name:
                return curve
        raise self.input_error('model %s has no curve named %r. Try again with %s.' % (
            self.name, name, generic.content([c.name for c in self.curves], end=' or ')))

    @property
    def distinguished_curves(self) -> Tuple[CurveRecord, ...]:
        return tuple(c for c in self.curves if c.distinguished)

    @property
    def sink_curves(self) -> Tuple[CurveRecord, ...]:
        return tuple(c for c in self.curves if c.through_sink)

    @classmethod
    def from_json(cls, obj):
        """
        Read a model. Field names are exact and unknown fields are rejected.
        :param obj: json object.
        :return:    variety model, not validated yet.
        """
        if not isinstance(obj, dict):
            raise InputError('(VarietyModel): model must be a json object.')
        unknown = sorted(set(obj) - set(MODEL_FIELDS))
        if unknown:
            raise InputError('(VarietyModel): unknown field(s) %s.' % generic.content(unknown))
        missing = [k for k in MODEL_FIELDS if k not in obj]
        if missing:
            raise InputError('(VarietyModel): missing field(s) %s.' % generic.content(missing))
        if not isinstance(obj['name'], str):
            raise InputError('(VarietyModel): name must be a string.')
        if not generic.isinstances(obj['rank'], int, nested=False):
            raise InputError('(VarietyModel): rank must be an integer.')
        if not generic.isvector(obj['divisors'], str):
            raise InputError('(VarietyModel): divisors must be a list of strings.')
        if not isinstance(obj['curves'], list):
            raise InputError('(VarietyModel): curves must be a list.')
        return cls(obj['name'], obj['rank'], tuple(obj['divisors']),
                   tuple(CurveRecord.from_json(c) for c in obj['curves']))

    def to_json(self) -> dict:
        """
        Model document, the inverse of from_json.
        """
        return {
            'name': self.name,
            'rank': self.rank,
            'divisors': list(self.divisor_labels),
            'curves': [c.to_json() for c in self.curves],
        }


def validate_model(model: VarietyModel) -> ValidationReport:
    """
    Check every invariant of a simple G-variety model.
    :param model:   variety model.
    :return:        validation report.
    """
    report = ValidationReport('model %s' % model.name,
                              ['rank', 'labels', 'curve_names', 'class_vectors', 'distinguished', 'sink', 'smooth'])
    r = model.rank
    if not isinstance(r, int) or r < 1:
        return report.add('rank', model.name, 'rank must be a positive integer, got %r' % (r,))
    if len(model.divisor_labels) != r:
        report.add('labels', model.name, '%d divisor labels for rank %d' % (len(model.divisor_labels), r))
    names = [c.name for c in model.curves]
    for name in sorted(set(n for n in names if names.count(n) > 1)):
        report.add('curve_names', name, 'curve name used %d times' % names.count(name))
    for curve in model.curves:
        if len(curve.class_vector) != r:
            report.add('class_vectors', curve.name, 'class has length %d, rank is %d' % (len(curve.class_vector), r))
        elif any(a < 0 for a in curve.class_vector):
            # Effective classes are non-negative combinations of the C_i.
            report.add('class_vectors', curve.name, 'class %s has a negative entry' % (list(curve.class_vector),))
        if not curve.through_sink:
            report.add('sink', curve.name, 'B-stable curves of a simple G-variety contain the sink')
        if curve.mult_at_sink != 1:
            report.add('smooth', curve.name, 'mult_at_sink must be 1, got %r' % (curve.mult_at_sink,))
    distinguished = model.distinguished_curves
    if len(distinguished) != r:
        report.add('distinguished', model.name, '%d distinguished curves for rank %d' % (len(distinguished), r))
    else:
        for i, curve in enumerate(distinguished):
            basis = tuple(1 if j == i else 0 for j in range(r))
            if curve.class_vector != basis:
                report.add('distinguished', curve.name,
                           'distinguished curve %d must have class %s' % (i + 1, list(basis)))
    return report


def require_valid(model: VarietyModel) -> VarietyModel:
    """
    Model itself when it passes validation, an input error listing every violation otherwise.
    :param model:   variety model.
    :return:        the same model.
    """
    validate_model(model).raise_for_violations()
    return model


def _check_divisor(model: VarietyModel, L: DivisorClass):
    if len(L.coeffs) != model.rank:
        raise model.input_error('divisor has %d coefficients, model rank is %d.' % (len(L.coeffs), model.rank))


def intersect(model: VarietyModel, L: DivisorClass, C: CurveRecord):
    """
    Intersection number L.C from D_i.C_j = delta_ij.
    :param model:   variety model.
    :param L:       divisor class.
    :param C:       curve record of the model.
    :return:        exact intersection number.
    """
    _check_divisor(model, L)
    if C not in model.curves:
        raise model.input_error('curve %s does not belong to model %s.' % (C.name, model.name))
    if len(C.class_vector) != model.rank:
        raise model.input_error('curve %s has a class of length %d.' % (C.name, len(C.class_vector)))
    return generic.simplify(sum((Fraction(a) * c for a, c in zip(L.coeffs, C.class_vector)), Fraction(0)))


def nef_check_linebundle(model: VarietyModel, L: DivisorClass) -> bool:
    """
    L is nef iff it has non-negative degree on every B-stable curve.
    :param model:   variety model.
    :param L:       divisor class.
    :return:        true or false.
    """
    require_valid(model)
    return all(intersect(model, L, C) >= 0 for C in model.curves)


def ample_check_linebundle(model: VarietyModel, L: DivisorClass) -> bool:
    """
    L is ample iff all its coefficients are positive. For integral classes this is a_i >= 1; rational classes
    are ample when some positive multiple is, which is again a_i > 0.
    :param model:   variety model.
    :param L:       divisor class.
    :return:        true or false.
    """
    require_valid(model)
    _check_divisor(model, L)
    return all(a > 0 for a in L.coeffs)


def seshadri_line(model: VarietyModel, L: DivisorClass) -> Fraction:
    """
    Seshadri constant of an ample line bundle at the sink, the smallest coefficient min_i a_i.
    :param model:   variety model.
    :param L:       ample divisor class.
    :return:        exact rational.
    """
    if not ample_check_linebundle(model, L):
        logger.debug('seshadri_line refused for %s on %s', list(L.coeffs), model.name)
        raise model.refused('Seshadri constant of %s asked.' % (list(L.coeffs),), AMPLE_HYPOTHESIS)
    return Fraction(min(L.coeffs))


def seshadri_ratios(model: VarietyModel, L: DivisorClass) -> Dict[str, Fraction]:
    """
    Seshadri ratio (L.C) / mult_x C of every curve through the sink. Their minimum bounds the Seshadri
    constant from above and equals it on these models.
    :param model:   variety model.
    :param L:       divisor class.
    :return:        ratios by curve name.
    """
    require_valid(model)
    return {C.name: Fraction(intersect(model, L, C)) / C.mult_at_sink for C in model.sink_curves}


def seshadri_at_divisor_sink(model: VarietyModel, L: DivisorClass, j: int) -> Fraction:
    """
    Seshadri constant of L = lambda * sum D_i at the sink of D_j, which is lambda.
    :param model:   variety model.
    :param L:       divisor class proportional to sum D_i.
    :param j:       0-based index of the divisor whose sink is used.
    :return:        exact rational lambda.
    """
    require_valid(model)
    _check_divisor(model, L)
    if not 0 <= j < model.rank:
        raise model.input_error('divisor index %d out of range 0..%d.' % (j, model.rank - 1))
    values = set(Fraction(a) for a in L.coeffs)
    if len(values) != 1 or next(iter(values)) <= 0:
        raise model.refused('Seshadri constant of %s at the sink of %s asked.' % (
            list(L.coeffs), model.divisor_labels[j]),
            'at the sink of D_j the value is known for L = lambda * sum D_i with lambda > 0 only.')
    return values.pop()
