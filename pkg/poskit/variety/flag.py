# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import re
import logging
from dataclasses import dataclass
from sympy import Matrix
from sympy.liealgebras.cartan_type import CartanType as SympyCartanType
from poskit.common import Common, InputError
from poskit.common import generic
from poskit.variety.model import VarietyModel, CurveRecord, require_valid


logger = logging.getLogger(__name__)


# Admissible ranks of every family, predicates keyed by family letter.
FAMILIES = {
    'A': {'rule': lambda n: n >= 1, 'text': 'n >= 1'},
    'B': {'rule': lambda n: n >= 2, 'text': 'n >= 2'},
    'C': {'rule': lambda n: n >= 3, 'text': 'n >= 3'},
    'D': {'rule': lambda n: n >= 4, 'text': 'n >= 4'},
    'E': {'rule': lambda n: n in (6, 7, 8), 'text': 'n in {6, 7, 8}'},
    'F': {'rule': lambda n: n == 4, 'text': 'n = 4'},
    'G': {'rule': lambda n: n == 2, 'text': 'n = 2'},
}


@dataclass(frozen=True)
class CartanType(Common):
    """
    Cartan type of a simple group, e.g. A3 or G2. Simple roots are used as index labels only.
    ---------
    @author:    Poskit Authors.
    @created:   6th October, 2026.
    """
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, 'family', family)
        if family not in FAMILIES:
            raise self.input_error('family %s not found. Try again with %s.' % (
                family, generic.content(list(FAMILIES), end=' or ')))
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or not FAMILIES[family]['rule'](self.rank):
            raise self.input_error('rank %r is not valid for family %s (%s).' % (
                self.rank, family, FAMILIES[family]['text']))

    @classmethod
    def parse(cls, text):
        """
        Read a type like 'A3', 'g2' or 'D5'.
        :param text:    type string, case-insensitive.
        :return:        cartan type.
        """
        match = re.fullmatch(r'\s*([A-Za-z])\s*(\d+)\s*', str(text))
        if match is None:
            raise InputError('(CartanType): cannot read %r as a Cartan type like A3 or G2.' % (text,))
        return cls(match.group(1), int(match.group(2)))

    def __str__(self):
        return '%s%d' % (self.family, self.rank)

    def cartan_matrix(self) -> Matrix:
        """
        Standard Cartan matrix with entries <alpha_i, alpha_j^vee>, checked before use.
        :return:        sympy integer matrix.
        """
        # The sympy type A table indexes past a 1x1 matrix.
        if self.rank == 1:
            matrix = Matrix([[2]])
        else:
            matrix = SympyCartanType(str(self)).cartan_matrix()
        n = self.rank
        if matrix.shape != (n, n):
            raise self.internal_error('Cartan matrix of %s has shape %s.' % (self, matrix.shape))
        for i in range(n):
            if matrix[i, i] != 2:
                raise self.internal_error('Cartan matrix of %s has %s on the diagonal.' % (self, matrix[i, i]))
            for j in range(n):
                if i != j and (matrix[i, j] > 0 or (matrix[i, j] == 0) != (matrix[j, i] == 0)):
                    raise self.internal_error('Cartan matrix of %s fails at entry (%d, %d).' % (self, i, j))
        if matrix.det() == 0:
            raise self.internal_error('Cartan matrix of %s is singular.' % self)
        return matrix


def _schubert_model(name, divisors, curves) -> VarietyModel:
    r = len(divisors)
    records = tuple(
        CurveRecord(curve, tuple(1 if j == i else 0 for j in range(r)), distinguished=True)
        for i, curve in enumerate(curves))
    return require_valid(VarietyModel(name, r, tuple(divisors), records))


def build_flag_model(t: CartanType) -> VarietyModel:
    """
    Model of the full flag variety G/B: Schubert divisors D_i and Schubert curves C_i, one per simple root.
    :param t:       cartan type.
    :return:        validated variety model.
    """
    if isinstance(t, str):
        t = CartanType.parse(t)
    # Only rank and labels feed the computation, the matrix is validated all the same.
    t.cartan_matrix()
    n = t.rank
    logger.debug('building flag model of type %s', t)
    return _schubert_model('G/B %s' % t, ['D%d' % (i + 1) for i in range(n)], ['C%d' % (i + 1) for i in range(n)])


def build_projective_space_model(n: int) -> VarietyModel:
    """
    Model of P^n under PGL(n+1): the hyperplane H = {x_0 = 0} and the line C = {x_2 = ... = x_n = 0}.
    :param n:       dimension.
    :return:        validated rank one model.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError('(VarietyModel): projective space needs n >= 1, got %r.' % (n,))
    return _schubert_model('P^%d' % n, ['H'], ['C'])
