# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import random
from fractions import Fraction
import pytest
from poskit import settings
from poskit.common import InputError, RefusedError
from poskit.cones import RationalCone, dual_cone, contains, cones_equal, primitive


def random_cone(rng, dim):
    count, generators = rng.randint(1, 6), []
    while len(generators) < count:
        g = tuple(rng.randint(-9, 9) for _ in range(dim))
        if any(g):
            generators.append(g)
    return RationalCone(dim, tuple(generators))


class TestRationalCone:
    def test_primitive(self):
        assert primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
        assert primitive((4, -6, 0)) == (2, -3, 0)

    def test_json_round_trip(self):
        cone = RationalCone.from_json({'dim': 2, 'generators': [[1, [1, 2]], [{'num': 0, 'den': 1}, 3]]})
        assert cone.generators == ((1, Fraction(1, 2)), (0, 3))
        assert RationalCone.from_json(cone.to_json()) == cone
        assert cone.to_json() == {'dim': 2, 'generators': [[1, [1, 2]], [0, 3]]}

    @pytest.mark.parametrize('obj', [
        {'dim': 2, 'generators': [[0, 0]]},
        {'dim': 2, 'generators': [[1, 0, 0]]},
        {'dim': 0, 'generators': []},
        {'dim': 2, 'generators': [[0.5, 1]]},
        {'dim': 2},
        {'dim': 2, 'generators': [], 'rays': []},
    ])
    def test_invalid(self, obj):
        with pytest.raises(InputError):
            RationalCone.from_json(obj)

    def test_normalized(self):
        cone = RationalCone(2, ((2, 2), (Fraction(1, 3), Fraction(1, 3)), (0, 5)))
        assert cone.normalized().generators == ((0, 1), (1, 1))


class TestDuality:
    def test_orthant_is_self_dual(self):
        for m in range(1, 6):
            assert dual_cone(RationalCone.orthant(m)).generators == RationalCone.orthant(m).normalized().generators

    def test_plane_cone(self):
        dual = dual_cone(RationalCone(2, ((1, 0), (1, 1))))
        assert dual.generators == ((0, 1), (1, -1))

    def test_zero_cone_and_whole_space(self):
        whole = dual_cone(RationalCone(2, ()))
        assert cones_equal(whole, RationalCone(2, ((1, 0), (-1, 0), (0, 1), (0, -1))))
        assert dual_cone(whole).generators == ()

    def test_half_plane_has_lineality(self):
        dual = dual_cone(RationalCone(2, ((1, 0), (-1, 0), (0, 1))))
        assert dual.generators == ((0, 1),)
        assert cones_equal(dual_cone(dual), RationalCone(2, ((1, 0), (-1, 0), (0, 1))))

    def test_cone_over_a_square(self):
        square = RationalCone(3, ((1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)))
        dual = dual_cone(square)
        assert dual.generators == ((-1, -1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, 1))
        assert dual_cone(dual).generators == square.normalized().generators
        assert cones_equal(dual_cone(dual), square)

    def test_double_duality(self):
        rng = random.Random(20261016)
        for _ in range(100):
            cone = random_cone(rng, rng.randint(1, 5))
            assert cones_equal(dual_cone(dual_cone(cone)), cone)

    def test_dimension_bound(self, monkeypatch):
        cone = RationalCone.orthant(3)
        settings.update(max_cone_dim=2)
        with pytest.raises(RefusedError):
            dual_cone(cone)
        settings.reset()
        monkeypatch.setenv('POSKIT_MAX_CONE_DIM', '2')
        with pytest.raises(RefusedError):
            dual_cone(cone)
        monkeypatch.setenv('POSKIT_MAX_CONE_DIM', '3')
        assert cones_equal(dual_cone(cone), cone)


class TestMembership:
    @pytest.mark.parametrize('vector, inside', [
        ((1, 0), True),
        ((2, 1), True),
        ((1, 1), True),
        ((Fraction(1, 2), Fraction(1, 3)), True),
        ((0, 1), False),
        ((1, -1), False),
        ((0, 0), True),
    ])
    def test_contains(self, vector, inside):
        assert contains(RationalCone(2, ((1, 0), (1, 1))), vector) is inside

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            contains(RationalCone.orthant(2), (1, 2, 3))
        with pytest.raises(InputError):
            cones_equal(RationalCone.orthant(2), RationalCone.orthant(3))

    def test_semantic_equality(self):
        a = RationalCone(2, ((1, 0), (0, 1)))
        b = RationalCone(2, ((0, 3), (2, 0), (1, 1)))
        assert cones_equal(a, b)
        assert not cones_equal(a, RationalCone(2, ((1, 0), (1, 1))))

    def test_generators_are_members(self):
        rng = random.Random(7)
        for _ in range(50):
            cone = random_cone(rng, rng.randint(1, 4))
            for g in cone.generators:
                assert contains(cone, g)

    def test_membership_is_scale_invariant(self):
        rng = random.Random(11)
        for _ in range(50):
            dim = rng.randint(1, 4)
            cone = random_cone(rng, dim)
            v = tuple(rng.randint(-5, 5) for _ in range(dim))
            for scale in (Fraction(1, 3), Fraction(7, 2), 5):
                assert contains(cone, v) is contains(cone, tuple(scale * x for x in v))
