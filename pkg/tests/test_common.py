# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from fractions import Fraction
import pytest
from poskit import settings
from poskit.common import KwargParse, ValidationReport, Settings, InputError, RefusedError, InternalError, \
    PoskitError, MAX_CONE_DIM_ENV
from poskit.common import generic


class TestErrors:
    @pytest.mark.parametrize('error, status, code', [
        (InputError, 'input_error', 2),
        (RefusedError, 'refused', 3),
        (InternalError, 'internal_error', 4),
    ])
    def test_status_and_exit_code(self, error, status, code):
        assert issubclass(error, PoskitError)
        assert error.status == status
        assert error.exit_code == code

    def test_refusal_keeps_hypothesis(self):
        error = RefusedError('asked', hypothesis='L ample')
        assert error.hypothesis == 'L ample'
        assert str(error) == 'asked'

    def test_input_error_is_value_error(self):
        with pytest.raises(ValueError):
            raise InputError('bad')


class TestGeneric:
    @pytest.mark.parametrize('value, expected', [
        (3, Fraction(3)),
        (Fraction(2, 4), Fraction(1, 2)),
        ('1/2', Fraction(1, 2)),
        (' -3/6 ', Fraction(-1, 2)),
        ([2, 6], Fraction(1, 3)),
        ({'num': 5, 'den': -10}, Fraction(-1, 2)),
    ])
    def test_to_fraction(self, value, expected):
        assert generic.to_fraction(value) == expected

    @pytest.mark.parametrize('value', [0.5, '0.5', '1e3', True, 'x', [1, 0], {'num': 1}, None])
    def test_to_fraction_refuses_inexact_or_malformed(self, value):
        with pytest.raises(InputError):
            generic.to_fraction(value)

    def test_parse_vector(self):
        assert generic.parse_vector('3,1,2') == (3, 1, 2)
        assert generic.parse_vector('1/2, -1') == (Fraction(1, 2), -1)
        assert generic.parse_vector('') == ()
        assert generic.parse_vector('1,2', integral=True) == (1, 2)
        with pytest.raises(InputError):
            generic.parse_vector('1/2,1', integral=True)

    def test_isinstances_excludes_booleans(self):
        assert generic.isinstances([1, [2, 3]], int)
        assert not generic.isinstances([1, True], int)
        assert generic.isinstances({'a': [1], 'b': [2]}, int)
        assert not generic.isinstances([2], int, nested=False)

    def test_isvector_refuses_extra_nesting(self):
        assert generic.isvector([1, -2], int)
        assert generic.isvector([], int)
        assert not generic.isvector([[1], 0], int)
        assert not generic.isvector((1, 2), int)
        assert not generic.isvector([1, False], int)
        assert generic.isvector([[1, 0], [0, 1]], int, depth=2)
        assert not generic.isvector([[[1], 0]], int, depth=2)
        assert not generic.isvector([1, 0], int, depth=2)

    def test_to_fraction_refuses_nested_pairs(self):
        with pytest.raises(InputError):
            generic.to_fraction([[1], 2])
        with pytest.raises(InputError):
            generic.to_fraction({'num': [1], 'den': 2})

    def test_rational_rendering(self):
        assert generic.rational_to_json(Fraction(-2, 4)) == {'num': -1, 'den': 2}
        assert generic.rational_to_text(Fraction(6, 3)) == '2'
        assert generic.rational_to_text(Fraction(1, 3)) == '1/3'
        assert generic.simplify(Fraction(4, 2)) == 2 and isinstance(generic.simplify(Fraction(4, 2)), int)

    def test_content(self):
        assert generic.content(['a', 'b', 'c']) == 'a, b and c'
        assert generic.content(['a']) == 'a'
        assert generic.content([]) == ''


class TestKwargParse:
    def test_rename_default_and_convert(self):
        parser = KwargParse().add('file', 'model', '-').add('n', None, 1, int)
        assert parser.parse(None, file='x.json', n='4', other=1) == {'model': 'x.json', 'n': 4}
        assert parser.parse(None) == {'model': '-', 'n': 1}

    def test_none_falls_back_to_default(self):
        parser = KwargParse().add('sink', None, None, int)
        assert parser.parse(None, sink=None) == {'sink': None}

    def test_names(self):
        assert KwargParse().add('a').add('b').names() == ['a', 'b']


class TestValidationReport:
    def test_collects_every_violation(self):
        report = ValidationReport('thing', ['x', 'y'])
        report.add('x', 'part 1', 'broken').add('y', 'part 2', 'broken too')
        assert not report.passed
        assert report.failed('x') and report.failed('y')
        with pytest.raises(InputError) as info:
            report.raise_for_violations()
        assert 'part 1' in str(info.value) and 'part 2' in str(info.value)

    def test_passing_report(self):
        report = ValidationReport('thing', ['x']).note('proxy')
        assert report.passed
        assert report.raise_for_violations() is report
        assert report.to_json() == {'subject': 'thing', 'passed': True, 'checks': ['x'], 'violations': [],
                                    'notes': ['proxy']}


class TestSettings:
    def test_singleton(self):
        assert Settings() is settings

    def test_default_update_reset(self):
        assert settings.max_cone_dim == 12
        assert settings.update(max_cone_dim=3).max_cone_dim == 3
        assert settings.reset().max_cone_dim == 12

    def test_unknown_or_invalid_setting(self):
        with pytest.raises(InputError):
            settings.update(colour='red')
        with pytest.raises(InputError):
            settings.update(max_cone_dim=0)

    def test_environment_wins(self, monkeypatch):
        settings.update(max_cone_dim=3)
        monkeypatch.setenv(MAX_CONE_DIM_ENV, '7')
        assert settings.max_cone_dim == 7
        monkeypatch.setenv(MAX_CONE_DIM_ENV, 'many')
        with pytest.raises(InputError):
            settings.max_cone_dim
