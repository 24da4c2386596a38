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
from typing import Optional, Tuple
from sympy import Matrix
from poskit.common import Common
from poskit.common import generic
from poskit.cones import RationalCone
from poskit.variety.model import VarietyModel, DivisorClass, require_valid, ample_check_linebundle, AMPLE_HYPOTHESIS


logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------------------------------------------------------
# BLOW-UP AT THE SINK:
# Divisor classes of Bl X are written in the basis (Bl*D_1, ..., Bl*D_r, E), curve classes in the basis
# (C~_1, ..., C~_r, e) where C~_i is the strict transform class Bl*C_i - e and e is a line in E. A class
# sum b_i Bl*D_i - c E therefore has coordinates (b_1, ..., b_r, -c).
# ----------------------------------------------------------------------------------------------------------------------
NON_NEF_HYPOTHESIS = 'the class is not nef on the blow-up: it pairs negatively with %s.'


@dataclass(frozen=True)
class BlowupModel(Common):
    """
    Picard and curve lattices of the blow-up of a simple G-variety at a sink, with their intersection pairing.
    ---------
    @author:    Poskit Authors.
    @created:   12nd October, 2026.
    """
    base: VarietyModel
    sink: Optional[int] = None

    @property
    def rank(self) -> int:
        return self.base.rank

    @property
    def sink_label(self) -> str:
        """
        Metadata only: x^- for the sink of X, x_j^- for the sink of D_j. The cones do not depend on it.
        """
        return 'x^-' if self.sink is None else 'x^-(%s)' % self.base.divisor_labels[self.sink]

    @property
    def divisor_labels(self) -> Tuple[str, ...]:
        return tuple('Bl*%s' % d for d in self.base.divisor_labels) + ('E',)

    @property
    def curve_labels(self) -> Tuple[str, ...]:
        return tuple('%s~' % c.name for c in self.base.distinguished_curves) + ('e',)

    @property
    def pairing_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Rows are divisors, columns are curves: Bl*D_j.C~_i = delta_ij, Bl*D_j.e = 0, E.C~_i = 1, E.e = -1.
        """
        r = self.rank
        rows = [tuple(1 if i == j else 0 for i in range(r)) + (0,) for j in range(r)]
        rows.append(tuple(1 for _ in range(r)) + (-1,))
        return tuple(rows)

    def to_json(self) -> dict:
        return {
            'base': self.base.name,
            'sink': self.sink_label,
            'divisors': list(self.divisor_labels),
            'curves': list(self.curve_labels),
            'pairing': [list(row) for row in self.pairing_matrix],
        }


def build_blowup(model: VarietyModel, sink: Optional[int] = None) -> BlowupModel:
    """
    Blow-up of a validated model at its sink, or at the sink of D_sink.
    :param model:   variety model.
    :param sink:    None for x^-, a 0-based divisor index j for x_j^-.
    :return:        blow-up model.
    """
    require_valid(model)
    if sink is not None and (isinstance(sink, bool) or not isinstance(sink, int) or not 0 <= sink < model.rank):
        raise model.input_error('sink index %r out of range 0..%d.' % (sink, model.rank - 1))
    return BlowupModel(model, sink)


def divisor_vector(b, c) -> Tuple[Fraction, ...]:
    """
    Coordinates of sum b_i Bl*D_i - c E in the divisor basis.
    :param b:   coefficients of the pulled back divisors.
    :param c:   coefficient of -E.
    :return:    rational vector (b_1, ..., b_r, -c).
    """
    return tuple(generic.to_fraction(x) for x in b) + (-generic.to_fraction(c),)


def pair(bm: BlowupModel, divisor, curve):
    """
    Intersection number of a divisor vector and a curve vector through the pairing matrix.
    :param bm:      blow-up model.
    :param divisor: coordinates in (Bl*D_1, ..., E).
    :param curve:   coordinates in (C~_1, ..., e).
    :return:        exact intersection number.
    """
    n = bm.rank + 1
    divisor = [generic.to_fraction(x) for x in divisor]
    curve = [generic.to_fraction(x) for x in curve]
    if len(divisor) != n or len(curve) != n:
        raise bm.input_error('classes on the blow-up have %d coordinates, got %d and %d.' % (
            n, len(divisor), len(curve)))
    matrix = bm.pairing_matrix
    return generic.simplify(sum(divisor[j] * matrix[j][i] * curve[i] for j in range(n) for i in range(n)))


def blowup_nef_generators(bm: BlowupModel) -> RationalCone:
    """
    Nef cone of the blow-up: Bl*D_1, ..., Bl*D_r and sum Bl*D_i - E.
    :param bm:  blow-up model.
    :return:    cone in divisor coordinates.
    """
    r = bm.rank
    generators = [tuple(1 if i == j else 0 for i in range(r)) + (0,) for j in range(r)]
    generators.append(tuple(1 for _ in range(r)) + (-1,))
    return RationalCone(r + 1, tuple(generators))


def blowup_mori_generators(bm: BlowupModel) -> RationalCone:
    """
    Mori cone of the blow-up: C~_1, ..., C~_r and e.
    :param bm:  blow-up model.
    :return:    cone in curve coordinates.
    """
    return RationalCone.orthant(bm.rank + 1)


def curves_to_divisor_dual(bm: BlowupModel, cone: RationalCone) -> RationalCone:
    """
    Rewrite a cone of curve classes in the coordinates dual to the divisor basis, z = P y.
    :param bm:      blow-up model.
    :param cone:    cone in curve coordinates.
    :return:        cone comparable with dual cones of divisor cones.
    """
    matrix = Matrix(bm.pairing_matrix)
    return RationalCone(cone.ambient_dim, tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in matrix * Matrix(list(g))) for g in cone.generators))


def divisor_dual_to_curves(bm: BlowupModel, cone: RationalCone) -> RationalCone:
    """
    Inverse of curves_to_divisor_dual, y = P^-1 z.
    :param bm:      blow-up model.
    :param cone:    cone in coordinates dual to the divisor basis.
    :return:        cone in curve coordinates.
    """
    inverse = Matrix(bm.pairing_matrix).inv()
    return RationalCone(cone.ambient_dim, tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in inverse * Matrix(list(g))) for g in cone.generators))


def _check_coefficients(bm: BlowupModel, b):
    if len(b) != bm.rank:
        raise bm.input_error('%d coefficients given for rank %d.' % (len(b), bm.rank))


def negative_curves(bm: BlowupModel, b, c) -> Tuple[str, ...]:
    """
    Mori generators on which sum b_i Bl*D_i - c E is negative.
    :param bm:  blow-up model.
    :param b:   coefficients of the pulled back divisors.
    :param c:   coefficient of -E.
    :return:    curve labels.
    """
    _check_coefficients(bm, b)
    vector = divisor_vector(b, c)
    mori = blowup_mori_generators(bm)
    return tuple(label for label, g in zip(bm.curve_labels, mori.generators) if pair(bm, vector, g) < 0)


def is_nef_on_blowup(bm: BlowupModel, b, c) -> bool:
    """
    sum b_i Bl*D_i - c E is nef iff c >= 0 and b_j >= c for every j.
    :param bm:  blow-up model.
    :param b:   rational coefficients of the pulled back divisors.
    :param c:   rational coefficient of -E.
    :return:    true or false.
    """
    _check_coefficients(bm, b)
    c = generic.to_fraction(c)
    return c >= 0 and all(generic.to_fraction(bj) >= c for bj in b)


def decompose_nef_class(bm: BlowupModel, b, c) -> Tuple[Fraction, ...]:
    """
    Write a nef class on the nef generators: c (sum Bl*D_i - E) + sum (b_j - c) Bl*D_j.
    :param bm:  blow-up model.
    :param b:   coefficients of the pulled back divisors.
    :param c:   coefficient of -E.
    :return:    (c, b_1 - c, ..., b_r - c), all non-negative.
    """
    if not is_nef_on_blowup(bm, b, c):
        raise bm.refused('decomposition of %s asked.' % ([str(x) for x in divisor_vector(b, c)],),
                         NON_NEF_HYPOTHESIS % generic.content(list(negative_curves(bm, b, c)), end=' and '))
    c = generic.to_fraction(c)
    return (c,) + tuple(generic.to_fraction(bj) - c for bj in b)


def seshadri_via_blowup(bm: BlowupModel, L: DivisorClass) -> Fraction:
    """
    Seshadri constant at the sink as sup{lambda : Bl*L - lambda E is nef}. The supremum is read off the Mori
    generators through the pairing matrix and is attained.
    :param bm:  blow-up model.
    :param L:   ample divisor class on the base.
    :return:    exact rational.
    """
    if not ample_check_linebundle(bm.base, L):
        raise bm.refused('Seshadri constant of %s asked.' % (list(L.coeffs),), AMPLE_HYPOTHESIS)
    pullback = divisor_vector(L.coeffs, 0)
    exceptional = divisor_vector([0] * bm.rank, 1)
    # (Bl*L - lambda E).y = alpha - lambda beta >= 0 on every Mori generator y.
    bounds = []
    for g in blowup_mori_generators(bm).generators:
        alpha, beta = Fraction(pair(bm, pullback, g)), -Fraction(pair(bm, exceptional, g))
        if beta > 0:
            bounds.append(alpha / beta)
        elif alpha < 0:
            raise bm.internal_error('Bl*L is not nef for ample L = %s.' % (list(L.coeffs),))
    if not bounds:
        raise bm.internal_error('no Mori generator bounds the twist by E.')
    value = min(bounds)
    if not is_nef_on_blowup(bm, L.coeffs, value):
        raise bm.internal_error('supremum %s is not attained for L = %s.' % (value, list(L.coeffs)))
    logger.debug('seshadri constant of %s at %s is %s', list(L.coeffs), bm.sink_label, value)
    return value
