# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from itertools import combinations
import pytest
from poskit import settings
from poskit.variety import Fan, build_flag_model, build_projective_space_model


def projective_fan(n):
    """
    Fan of P^n: e_1, ..., e_n, -(e_1 + ... + e_n) and every n of them spanning a cone.
    """
    rays = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)] + [tuple(-1 for _ in range(n))]
    return Fan(n, rays, list(combinations(range(n + 1), n)))


def hirzebruch_fan(a):
    """
    Fan of the Hirzebruch surface F_a with rays e1, e2, (-1, a), -e2 in this order.
    """
    return Fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def p2():
    return projective_fan(2)


@pytest.fixture
def p1xp1():
    return Fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def f1():
    return hirzebruch_fan(1)


@pytest.fixture
def f2():
    return hirzebruch_fan(2)


@pytest.fixture
def surfaces(p2, p1xp1, f1, f2):
    return {'P2': p2, 'P1xP1': p1xp1, 'F1': f1, 'F2': f2}


@pytest.fixture
def a2():
    return build_flag_model('A2')


@pytest.fixture
def a3():
    return build_flag_model('A3')


@pytest.fixture
def p3_model():
    return build_projective_space_model(3)


@pytest.fixture
def model_json():
    """
    Rank two model with one extra curve of class C1 + C2 through the sink.
    """
    return {
        'name': 'X',
        'rank': 2,
        'divisors': ['D1', 'D2'],
        'curves': [
            {'name': 'C1', 'class': [1, 0], 'distinguished': True},
            {'name': 'C2', 'class': [0, 1], 'distinguished': True},
            {'name': 'C3', 'class': [1, 1]},
        ],
    }


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    monkeypatch.delenv('POSKIT_MAX_CONE_DIM', raising=False)
    settings.reset()
    yield
    settings.reset()


@pytest.fixture
def projective_space_fan():
    return projective_fan
