# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import logging
from math import gcd
from fractions import Fraction
from functools import lru_cache, reduce
from dataclasses import dataclass
from typing import Tuple
import cdd
from poskit import settings
from poskit.common import Common, InputError, InternalError
from poskit.common import generic


logger = logging.getLogger(__name__)


CONE_FIELDS = ('dim', 'generators')


def _lcm(a, b):
    return a * b // gcd(a, b)


def primitive(vector) -> Tuple[int, ...]:
    """
    Scale a nonzero rational vector to the primitive integer vector on the same ray.
    :param vector:  rational vector.
    :return:        integer vector with coprime entries.
    """
    vector = [Fraction(x) for x in vector]
    den = reduce(_lcm, (x.denominator for x in vector), 1)
    ints = [int(x * den) for x in vector]
    g = reduce(gcd, ints, 0)
    return tuple(x // g for x in ints) if g else tuple(ints)


@dataclass(frozen=True)
class RationalCone(Common):
    """
    Finitely generated cone in Q^m: all non-negative rational combinations of its generators. No generators
    means the zero cone.
    ---------
    @author:    Poskit Authors.
    @created:   10th October, 2026.
    """
    ambient_dim: int
    generators: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if isinstance(self.ambient_dim, bool) or not isinstance(self.ambient_dim, int) or self.ambient_dim < 1:
            raise self.input_error('ambient dimension must be a positive integer, got %r.' % (self.ambient_dim,))
        generators = tuple(tuple(generic.to_fraction(x) for x in g) for g in self.generators)
        for g in generators:
            if len(g) != self.ambient_dim:
                raise self.input_error('generator %s does not live in Q^%d.' % (
                    [str(x) for x in g], self.ambient_dim))
            if not any(g):
                raise self.input_error('generators must be nonzero.')
        object.__setattr__(self, 'generators', generators)

    @classmethod
    def from_json(cls, obj):
        """
        Read a cone {"dim", "generators"}; entries are integers, [num, den] pairs or {"num", "den"} objects.
        :param obj: json object.
        :return:    rational cone.
        """
        if not isinstance(obj, dict):
            raise InputError('(RationalCone): cone must be a json object.')
        unknown = sorted(set(obj) - set(CONE_FIELDS))
        if unknown:
            raise InputError('(RationalCone): unknown field(s) %s.' % generic.content(unknown))
        missing = [k for k in CONE_FIELDS if k not in obj]
        if missing:
            raise InputError('(RationalCone): missing field(s) %s.' % generic.content(missing))
        if not isinstance(obj['generators'], list) or not all(isinstance(g, list) for g in obj['generators']):
            raise InputError('(RationalCone): generators must be a list of vectors.')
        return cls(obj['dim'], tuple(tuple(g) for g in obj['generators']))

    def to_json(self) -> dict:
        """
        Cone document; integral entries stay integers and the others become [num, den] pairs.
        """
        return {
            'dim': self.ambient_dim,
            'generators': [[generic.simplify(x) if Fraction(x).denominator == 1 else [x.numerator, x.denominator]
                            for x in g] for g in self.generators],
        }

    @classmethod
    def orthant(cls, m):
        """
        First orthant of Q^m.
        :param m:   dimension.
        :return:    rational cone.
        """
        return cls(m, tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m)))

    def normalized(self):
        """
        Same cone with primitive integer generators, deduplicated and sorted lexicographically.
        :return:    rational cone.
        """
        return RationalCone(self.ambient_dim, tuple(sorted(set(primitive(g) for g in self.generators))))


def _check_dim(cone: RationalCone, m: int, what='vector'):
    if cone.ambient_dim != m:
        raise cone.input_error('%s lives in Q^%d, cone lives in Q^%d.' % (what, m, cone.ambient_dim))


def _dualize(rows, m) -> Tuple[Tuple[int, ...], ...]:
    """
    Generators of {y : row . y >= 0 for every row} by double description in exact arithmetic.
    """
    if not rows:
        # Dual of the zero cone is the whole space.
        return tuple(tuple(s if i == j else 0 for j in range(m)) for i in range(m) for s in (1, -1))
    # cdd reads b - A x >= 0 from rows [b, -A]; cones have b = 0.
    matrix = cdd.Matrix([[0] + [Fraction(x) for x in row] for row in rows], number_type='fraction')
    matrix.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(matrix).get_generators()
    out = set()
    for i in range(generators.row_size):
        row = [Fraction(x) for x in generators[i]]
        head, vector = row[0], row[1:]
        if not any(vector):
            continue
        if head != 0:
            raise InternalError('(RationalCone): double description returned vertex %s of a cone.' % row)
        ray = primitive(vector)
        out.add(ray)
        if i in generators.lin_set:
            out.add(tuple(-x for x in ray))
    return tuple(sorted(out))


@lru_cache(maxsize=256)
def _facet_normals(cone: RationalCone) -> Tuple[Tuple[int, ...], ...]:
    return _dualize(cone.normalized().generators, cone.ambient_dim)


def dual_cone(C: RationalCone) -> RationalCone:
    """
    Dual cone {y : y . x >= 0 for all x in C}.
    :param C:   rational cone.
    :return:    rational cone with primitive, sorted generators.
    """
    bound = settings.max_cone_dim
    if C.ambient_dim > bound:
        raise C.refused('dual cone in Q^%d asked.' % C.ambient_dim,
                        'cone duality is limited to ambient dimension %d (set POSKIT_MAX_CONE_DIM to change it).'
                        % bound)
    normals = _facet_normals(C)
    logger.debug('dualized %d generators in Q^%d into %d generators', len(C.generators), C.ambient_dim, len(normals))
    return RationalCone(C.ambient_dim, normals)


def contains(C: RationalCone, v) -> bool:
    """
    Membership test against the generators of the dual cone.
    :param C:   rational cone.
    :param v:   rational vector.
    :return:    true or false.
    """
    v = tuple(generic.to_fraction(x) for x in v)
    _check_dim(C, len(v))
    return all(sum(h * x for h, x in zip(normal, v)) >= 0 for normal in dual_cone(C).generators)


def cones_equal(A: RationalCone, B: RationalCone) -> bool:
    """
    Semantic equality: every generator of each cone lies in the other.
    :param A:   rational cone.
    :param B:   rational cone.
    :return:    true or false.
    """
    _check_dim(A, B.ambient_dim, 'second cone')
    return all(contains(A, g) for g in B.generators) and all(contains(B, g) for g in A.generators)
