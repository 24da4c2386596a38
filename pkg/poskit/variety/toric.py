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
from functools import lru_cache
from itertools import combinations
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, List, Tuple
from sympy import Matrix, Rational
from poskit.common import Common, ValidationReport, InputError
from poskit.common import generic


logger = logging.getLogger(__name__)


NEF_HYPOTHESIS = 'Seshadri constants are defined for nef divisors; this divisor has negative degree on a wall curve.'
FAN_FIELDS = ('dim', 'rays', 'max_cones')


@dataclass(frozen=True)
class Fan(Common):
    """
    Complete smooth fan: primitive rays in Z^d and maximal cones given by d ray indices (0-based).
    ---------
    @author:    Poskit Authors.
    @created:   8th October, 2026.
    """
    dim: int
    rays: Tuple[Tuple[int, ...], ...]
    max_cones: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'rays', tuple(tuple(u) for u in self.rays))
        object.__setattr__(self, 'max_cones', tuple(tuple(sorted(s)) for s in self.max_cones))

    @classmethod
    def from_json(cls, obj):
        """
        Read a fan {"dim", "rays", "max_cones"}; unknown fields are rejected.
        :param obj: json object.
        :return:    fan, not validated yet.
        """
        if not isinstance(obj, dict):
            raise InputError('(Fan): fan must be a json object.')
        unknown = sorted(set(obj) - set(FAN_FIELDS))
        if unknown:
            raise InputError('(Fan): unknown field(s) %s.' % generic.content(unknown))
        missing = [k for k in FAN_FIELDS if k not in obj]
        if missing:
            raise InputError('(Fan): missing field(s) %s.' % generic.content(missing))
        if not generic.isinstances(obj['dim'], int, nested=False):
            raise InputError('(Fan): dim must be an integer.')
        for key in ('rays', 'max_cones'):
            if not generic.isvector(obj[key], int, depth=2):
                raise InputError('(Fan): %s must be a list of integer lists.' % key)
        return cls(obj['dim'], obj['rays'], obj['max_cones'])

    def to_json(self) -> dict:
        # Same field names as from_json reads.
        return {'dim': self.dim, 'rays': [list(u) for u in self.rays], 'max_cones': [list(s) for s in self.max_cones]}


@dataclass(frozen=True)
class Wall(Common):
    """
    Codimension one cone shared by two maximal cones, i.e. a torus invariant curve. The wall relation reads
    u + u' = sum b_i u_i over the shared rays u_i.
    ---------
    @author:    Poskit Authors.
    @created:   8th October, 2026.
    """
    ray_indices: Tuple[int, ...]
    cone_pair: Tuple[int, int]
    opposite_rays: Tuple[int, int]
    relation_coeffs: Tuple[int, ...]

    @property
    def name(self) -> str:
        return 'W' + '_'.join(str(i) for i in self.ray_indices)

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'ray_indices': list(self.ray_indices),
            'cone_pair': list(self.cone_pair),
            'opposite_rays': list(self.opposite_rays),
            'relation_coeffs': list(self.relation_coeffs),
        }


@dataclass(frozen=True)
class ToricDivisor(Common):
    """
    Torus invariant divisor D = sum a_rho D_rho, one coefficient per ray.
    """
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(generic.simplify(generic.to_fraction(a)) for a in self.coeffs))

    @classmethod
    def parse(cls, text):
        return cls(generic.parse_vector(text))

    def to_json(self) -> list:
        return [a if isinstance(a, int) else generic.rational_to_json(a) for a in self.coeffs]


def _facets(f: Fan) -> Dict[Tuple[int, ...], List[int]]:
    """
    Map every (d-1)-subset of a maximal cone to the cones containing it.
    """
    facets = defaultdict(list)
    for k, cone in enumerate(f.max_cones):
        for facet in combinations(cone, f.dim - 1):
            facets[facet].append(k)
    return facets


def _express(f: Fan, cone: Tuple[int, ...], first: int, vector) -> List[Rational]:
    """
    Coordinates of vector in the basis (u_first, other rays of cone in index order).
    """
    basis = [first] + [i for i in cone if i != first]
    matrix = Matrix([list(f.rays[i]) for i in basis]).T
    return list(matrix.LUsolve(Matrix(list(vector))))


def validate_fan(f: Fan) -> ValidationReport:
    """
    Check primitivity, smoothness, separation, the facet pairing completeness proxy and connectivity.
    :param f:       fan.
    :return:        validation report.
    """
    report = ValidationReport('fan', ['structure', 'primitive', 'duplicates', 'smooth', 'complete', 'separation',
                                      'connected'])
    report.note('completeness is checked by the facet pairing proxy: every facet lies in exactly two maximal cones.')
    d = f.dim
    if not isinstance(d, int) or d < 1:
        return report.add('structure', 'fan', 'dim must be a positive integer, got %r' % (d,))
    for i, u in enumerate(f.rays):
        if len(u) != d:
            report.add('structure', 'ray %d' % i, 'has %d entries, dim is %d' % (len(u), d))
    for k, cone in enumerate(f.max_cones):
        if len(cone) != d or len(set(cone)) != d:
            report.add('structure', 'cone %d' % k, 'must list %d distinct rays, got %s' % (d, list(cone)))
        elif any(not 0 <= i < len(f.rays) for i in cone):
            report.add('structure', 'cone %d' % k, 'ray index out of range in %s' % list(cone))
    if not f.max_cones:
        report.add('structure', 'fan', 'no maximal cones')
    if report.failed('structure'):
        return report
    for i, u in enumerate(f.rays):
        if not any(u):
            report.add('primitive', 'ray %d' % i, 'zero vector')
        elif gcd(*u) != 1:
            report.add('primitive', 'ray %d' % i, '%s is not primitive' % list(u))
    seen = {}
    for i, u in enumerate(f.rays):
        if u in seen:
            report.add('duplicates', 'ray %d' % i, 'repeats ray %d' % seen[u])
        seen.setdefault(u, i)
    cones = [tuple(c) for c in f.max_cones]
    for k in sorted(set(k for k in range(len(cones)) if cones.count(cones[k]) > 1)):
        report.add('duplicates', 'cone %d' % k, 'cone %s listed twice' % list(cones[k]))
    for k, cone in enumerate(f.max_cones):
        det = Matrix([list(f.rays[i]) for i in cone]).det()
        if abs(det) != 1:
            report.add('smooth', 'cone %d' % k, 'determinant %s, rays are not a Z-basis' % det)
    facets = _facets(f)
    for facet, owners in sorted(facets.items()):
        if len(owners) != 2:
            report.add('complete', 'facet %s' % list(facet), 'lies in %d maximal cone(s), expected 2' % len(owners))
    if not report.failed('smooth') and not report.failed('complete'):
        for facet, (k, l) in sorted(facets.items()):
            u, = set(f.max_cones[k]) - set(facet)
            v, = set(f.max_cones[l]) - set(facet)
            if _express(f, f.max_cones[k], u, f.rays[v])[0] != -1:
                report.add('separation', 'facet %s' % list(facet),
                           'cones %d and %d do not lie on opposite sides' % (k, l))
    # Adjacency graph of maximal cones.
    adjacent = defaultdict(set)
    for owners in facets.values():
        for k in owners:
            adjacent[k].update(owners)
    reached, queue = {0}, deque([0])
    while queue:
        for l in adjacent[queue.popleft()] - reached:
            reached.add(l)
            queue.append(l)
    if len(reached) != len(f.max_cones):
        report.add('connected', 'fan', 'cones %s are not reachable from cone 0' % sorted(
            set(range(len(f.max_cones))) - reached))
    return report


@lru_cache(maxsize=64)
def enumerate_walls(f: Fan) -> Tuple[Wall, ...]:
    """
    One wall per shared facet with its relation solved exactly, sorted by shared ray indices.
    :param f:       fan.
    :return:        tuple of walls.
    """
    validate_fan(f).raise_for_violations()
    walls = []
    for facet, (k, l) in sorted(_facets(f).items()):
        u, = set(f.max_cones[k]) - set(facet)
        v, = set(f.max_cones[l]) - set(facet)
        coords = _express(f, f.max_cones[k], u, f.rays[v])
        if coords[0] != -1 or any(not c.is_integer for c in coords):
            raise f.internal_error('wall %s has no integral relation: %s.' % (list(facet), coords))
        b = tuple(int(c) for c in coords[1:])
        wall = Wall(tuple(facet), (k, l), (u, v), b)
        # u + u' - sum b_i u_i must vanish.
        residue = [f.rays[u][t] + f.rays[v][t] - sum(bi * f.rays[i][t] for bi, i in zip(b, facet))
                   for t in range(f.dim)]
        if any(residue):
            raise f.internal_error('relation of wall %s leaves residue %s.' % (wall.name, residue))
        walls.append(wall)
    logger.debug('fan with %d rays has %d walls', len(f.rays), len(walls))
    return tuple(walls)


def _check_divisor(f: Fan, D: ToricDivisor):
    if len(D.coeffs) != len(f.rays):
        raise f.input_error('divisor has %d coefficients, fan has %d rays.' % (len(D.coeffs), len(f.rays)))


def divisor_degree_on_wall(f: Fan, D: ToricDivisor, w: Wall):
    """
    Degree of D on the wall curve: a_u + a_u' - sum b_i a_{u_i}.
    :param f:       fan.
    :param D:       toric divisor.
    :param w:       wall of the fan.
    :return:        exact degree.
    """
    _check_divisor(f, D)
    a = D.coeffs
    u, v = w.opposite_rays
    return generic.simplify(Fraction(a[u]) + a[v] - sum(Fraction(b) * a[i] for b, i in zip(w.relation_coeffs,
                                                                                          w.ray_indices)))


def divisor_degrees(f: Fan, D: ToricDivisor) -> Dict[str, int]:
    """
    Degrees of D on every wall curve.
    :param f:       fan.
    :param D:       toric divisor.
    :return:        degrees by wall name.
    """
    _check_divisor(f, D)
    return {w.name: divisor_degree_on_wall(f, D, w) for w in enumerate_walls(f)}


def nef_check_toric(f: Fan, D: ToricDivisor) -> bool:
    """
    D is nef iff its degree on every torus invariant curve is non-negative.
    :param f:       fan.
    :param D:       toric divisor.
    :return:        true or false.
    """
    return all(degree >= 0 for degree in divisor_degrees(f, D).values())


def fixed_point_walls(f: Fan, sigma: int) -> Tuple[Wall, ...]:
    """
    Walls whose curves pass through the torus fixed point of a maximal cone.
    :param f:       fan.
    :param sigma:   index of maximal cone.
    :return:        the d incident walls.
    """
    if isinstance(sigma, bool) or not isinstance(sigma, int) or not 0 <= sigma < len(f.max_cones):
        raise f.input_error('cone index %r out of range 0..%d.' % (sigma, len(f.max_cones) - 1))
    return tuple(w for w in enumerate_walls(f) if sigma in w.cone_pair)


def seshadri_toric_fixed_point(f: Fan, D: ToricDivisor, sigma: int) -> Fraction:
    """
    Seshadri constant of a nef divisor at a torus fixed point: smallest degree over the incident walls.
    :param f:       fan.
    :param D:       nef toric divisor.
    :param sigma:   index of maximal cone, the fixed point.
    :return:        exact rational.
    """
    walls = fixed_point_walls(f, sigma)
    if not nef_check_toric(f, D):
        raise f.refused('Seshadri constant of %s asked.' % (list(D.coeffs),), NEF_HYPOTHESIS)
    return Fraction(min(divisor_degree_on_wall(f, D, w) for w in walls))


def intersection_numbers_by_linear_equivalence(f: Fan) -> Dict[Tuple[int, str], Fraction]:
    """
    Every D_rho.C_w solved from the relations sum_rho <m, u_rho> D_rho ~ 0 together with D_rho.C_w = 0 for rays
    away from the wall and D_rho.C_w = 1 for its two opposite rays. Independent of the wall relation.
    :param f:       fan.
    :return:        intersection numbers by (ray index, wall name).
    """
    numbers = {}
    for w in enumerate_walls(f):
        known = {i: 0 for i in range(len(f.rays))}
        known.update({i: 1 for i in w.opposite_rays})
        unknown = list(w.ray_indices)
        for i in unknown:
            known.pop(i)
        # One equation per coordinate m = e_t: sum_i <e_t, u_i> x_i = -sum_known <e_t, u_rho> value.
        lhs = Matrix([[f.rays[i][t] for i in unknown] for t in range(f.dim)]) if unknown else None
        rhs = Matrix([-sum(f.rays[i][t] * value for i, value in known.items()) for t in range(f.dim)])
        if lhs is None:
            if any(rhs):
                raise f.internal_error('linear equivalence fails on wall %s.' % w.name)
            solution = []
        else:
            try:
                solution, params = lhs.gauss_jordan_solve(rhs)
            except ValueError:
                raise f.internal_error('linear equivalence has no solution on wall %s.' % w.name)
            if params.shape[0]:
                raise f.internal_error('linear equivalence is underdetermined on wall %s.' % w.name)
        for i, value in known.items():
            numbers[(i, w.name)] = Fraction(value)
        for i, value in zip(unknown, solution):
            numbers[(i, w.name)] = Fraction(int(value.p), int(value.q))
    return numbers
