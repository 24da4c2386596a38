# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from numbers import Rational
from fractions import Fraction
from poskit.common.errors import InputError


def isinstances(x, types, nested=True) -> bool:
    """
    Check if input object(s) is (an)instances of types or not.
    :param x:       input objects. Can be singular, list, tuple and dict.
    :param types:   types that need to be check.
    :param nested:  use nested strategy or not.
    :return:        true or false.
    ---------
    @author:    Poskit Authors.
    @created:   3rd October, 2026.
    """
    # In case of inputs is dict, test all its values.
    if isinstance(x, dict) and nested:
        return all(isinstances(v, types, nested) for v in x.values())
    # In case of inputs is list or tuple, test all its items.
    elif isinstance(x, (list, tuple)) and nested:
        return all(isinstances(i, types, nested) for i in x)
    # Booleans are integers for python but never for us.
    if isinstance(x, bool) and bool not in (types if isinstance(types, tuple) else (types,)):
        return False
    return isinstance(x, types)


def isvector(x, types, depth=1) -> bool:
    """
    Check if input object is a list of depth nested levels whose leaves are all instances of types. Unlike
    isinstances, a leaf that is itself a list is refused.
    :param x:       input object.
    :param types:   types of the leaves.
    :param depth:   number of list levels, 1 for a vector and 2 for a list of vectors.
    :return:        true or false.
    """
    if not isinstance(x, list):
        return False
    if depth <= 1:
        return all(isinstances(i, types, nested=False) for i in x)
    return all(isvector(i, types, depth - 1) for i in x)


def content(x, separator=', ', end=' and ') -> str:
    """
    Generate string that represent inputs in readable way.
    :param x:           inputs object.
    :param separator:   separator word. Be used if inputs is list.
    :param end:         ending word. Be used if inputs is listable.
    :return:            string that represents inputs.
    """
    # In case of inputs is dict, show its pairs.
    if isinstance(x, dict):
        return content(['%s=%s' % (k, v) for k, v in x.items()], separator, end)
    # In case of inputs is list or tuple, join its items.
    elif isinstance(x, (list, tuple)):
        x = [str(i) for i in x]
        if not x:
            return ''
        return '%s%s%s' % (separator.join(x[:-1]), end if len(x) > 1 else '', x[-1])
    return str(x)


def to_fraction(value) -> Fraction:
    """
    Convert an exact scalar into a fraction. Floats are refused.
    :param value:   integer, fraction, 'p/q' string, [num, den] pair or {"num", "den"} object.
    :return:        fraction.
    """
    if isinstance(value, bool):
        raise InputError('boolean %r is not a number.' % value)
    if isinstance(value, (int, Fraction)) or (isinstance(value, Rational) and not isinstance(value, float)):
        return Fraction(value)
    if isinstance(value, str):
        # Decimal notation hides floating point.
        if '.' in value or 'e' in value.lower():
            raise InputError('decimal %r is not exact, write it as p/q.' % value)
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError('cannot read %r as an exact rational.' % value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and isvector(list(value), int):
        return _pair(value[0], value[1])
    if isinstance(value, dict) and set(value) == {'num', 'den'} and isvector(list(value.values()), int):
        return _pair(value['num'], value['den'])
    raise InputError('cannot read %r as an exact rational.' % (value,))


def _pair(num, den) -> Fraction:
    if den == 0:
        raise InputError('zero denominator in %s/%s.' % (num, den))
    return Fraction(num, den)


def to_integer(value, what='value') -> int:
    """
    Convert an exact scalar into an integer.
    :param value:   input value.
    :param what:    name of the value used in messages.
    :return:        integer.
    """
    q = to_fraction(value)
    if q.denominator != 1:
        raise InputError('%s must be an integer, got %s.' % (what, q))
    return int(q)


def parse_vector(text, integral=False) -> tuple:
    """
    Parse comma separated exact numbers, e.g. '3,1,2' or '1/2,0'.
    :param text:        input text.
    :param integral:    demand integer entries.
    :return:            tuple of fractions (or integers).
    """
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [i for i in str(text).replace(' ', '').split(',')]
        if items == ['']:
            items = []
    if integral:
        return tuple(to_integer(i, 'entry') for i in items)
    return tuple(to_fraction(i) for i in items)


def simplify(value):
    """
    Collapse an integral fraction into an integer, keep other fractions.
    :param value:   exact scalar.
    :return:        integer or fraction.
    """
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def rational_to_json(value) -> dict:
    """
    Serialize an exact rational as {"num", "den"} in lowest terms with positive denominator.
    :param value:   exact scalar.
    :return:        json object.
    """
    value = Fraction(value)
    return {'num': value.numerator, 'den': value.denominator}


def rational_to_text(value) -> str:
    """
    Human readable form of an exact rational.
    :param value:   exact scalar.
    :return:        'p' or 'p/q'.
    """
    return str(Fraction(value))
