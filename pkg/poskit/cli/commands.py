# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from poskit.cli.command import Command, read_json
from poskit.common import KwargParse, InputError
from poskit.common import generic
from poskit.cones import RationalCone, dual_cone, contains, cones_equal
from poskit.variety import model as core
from poskit.variety import flag, toric, blowup, bundles


text = generic.rational_to_text


# ----------------------------------------------------------------------------------------------------------------------
# LOADERS:
# Converters from command line strings to library values, used by the kwarg parsers of the operator tables.
# ----------------------------------------------------------------------------------------------------------------------
def load_model(path):
    return core.VarietyModel.from_json(read_json(path))


def load_fan(path):
    return toric.Fan.from_json(read_json(path))


def load_cone(path):
    return RationalCone.from_json(read_json(path))


def load_space(path):
    """
    A bundle lives on a variety model or on a fan; fans are recognised by their rays.
    """
    obj = read_json(path)
    if isinstance(obj, dict) and 'rays' in obj:
        return toric.Fan.from_json(obj)
    return core.VarietyModel.from_json(obj)


def load_bundle(path):
    return bundles.SplittingData.from_json(read_json(path))


def index(value):
    """
    0-based index of a divisor or of a maximal cone.
    """
    return generic.to_integer(value, 'index')


# Arguments shared by several actions.
FILE = (('file',), {'nargs': '?', 'default': '-', 'help': 'json input file, stdin when omitted or -.'})
DIVISOR = (('--L',), {'required': True, 'help': 'divisor coefficients, e.g. 3,1,2 (use --L=-1,2 for a leading minus).'})
TORIC_DIVISOR = (('--D',), {'required': True, 'help': 'one coefficient per ray, e.g. 0,0,1.'})
CONE = (('--cone',), {'help': 'index of the maximal cone whose fixed point is used.'})
SINK = (('--sink',), {'help': 'blow up the sink of D_j (0-based j) instead of the sink of X.'})
B = (('--b',), {'required': True, 'help': 'coefficients of the pulled back divisors Bl*D_i.'})
C = (('--c',), {'required': True, 'help': 'coefficient c of -E.'})
BUNDLE = (('--bundle',), {'required': True, 'help': 'splitting data json file.'})


def model_with_divisor():
    """
    Kwarg parser shared by the actions taking a model file and a divisor --L.
    :return:    kwarg parser.
    """
    return KwargParse().add('file', 'model', convert=load_model).add('L', None, convert=core.DivisorClass.parse)


def _report(report):
    """
    Payload and message of a validation report, an input error when it failed.
    """
    report.raise_for_violations()
    return report.to_json(), str(report)


# ----------------------------------------------------------------------------------------------------------------------
# MODEL:
# ----------------------------------------------------------------------------------------------------------------------
def model_validate(model):
    return _report(core.validate_model(model))


def model_intersect(model, L, curve):
    degree = core.intersect(model, L, model.curve(curve))
    return {'curve': curve, 'degree': degree}, 'L.%s = %s' % (curve, text(degree))


def model_nef(model, L):
    nef = core.nef_check_linebundle(model, L)
    return {'nef': nef}, 'nef: %s' % str(nef).lower()


def model_ample(model, L):
    ample = core.ample_check_linebundle(model, L)
    return {'ample': ample}, 'ample: %s' % str(ample).lower()


def model_seshadri(model, L, sink=None):
    # Sink of X by default, otherwise the sink of D_j.
    if sink is None:
        value, point = core.seshadri_line(model, L), 'x^-'
    else:
        value, point = core.seshadri_at_divisor_sink(model, L, sink), 'x^-(%s)' % model.divisor_labels[sink]
    return {'seshadri': value, 'point': point}, 'seshadri constant at %s: %s' % (point, text(value))


def model_ratios(model, L):
    ratios = core.seshadri_ratios(model, L)
    return {'ratios': ratios}, '\n'.join('%s: %s' % (name, text(q)) for name, q in ratios.items())


class ModelCommand(Command):
    NAME = 'model'
    HELP = 'line bundles on a simple G-variety model.'
    OPERATORS = {
        # Every invariant of the model, all violations at once.
        'validate': {
            'func': model_validate,
            'help': 'validate a variety model.',
            'arguments': [FILE],
            'parse': KwargParse().add('file', 'model', convert=load_model),
        },
        # Intersection number of a divisor class with a named curve.
        'intersect': {
            'func': model_intersect,
            'help': 'intersection number L.C.',
            'arguments': [FILE, DIVISOR, (('--curve',), {'required': True, 'help': 'curve name.'})],
            'parse': model_with_divisor()
            .add('curve', None),
        },
        'nef': {
            'func': model_nef,
            'help': 'nefness of a line bundle.',
            'arguments': [FILE, DIVISOR],
            'parse': model_with_divisor(),
        },
        'ample': {
            'func': model_ample,
            'help': 'ampleness of a line bundle.',
            'arguments': [FILE, DIVISOR],
            'parse': model_with_divisor(),
        },
        # Seshadri constant at the sink, or at the sink of D_j for multiples of sum D_i.
        'seshadri': {
            'func': model_seshadri,
            'help': 'Seshadri constant of an ample line bundle at the sink.',
            'arguments': [FILE, DIVISOR, SINK],
            'parse': model_with_divisor()
            .add('sink', None, None, index),
        },
        'ratios': {
            'func': model_ratios,
            'help': 'ratios L.C / mult C over the curves through the sink.',
            'arguments': [FILE, DIVISOR],
            'parse': model_with_divisor(),
        },
    }


# ----------------------------------------------------------------------------------------------------------------------
# FLAG:
# ----------------------------------------------------------------------------------------------------------------------
def flag_build(cartan):
    model = flag.build_flag_model(cartan)
    return model, 'model %s of Picard rank %d' % (model.name, model.rank)


def flag_projective(n):
    model = flag.build_projective_space_model(n)
    return model, 'model %s of Picard rank 1' % model.name


def flag_cartan(cartan):
    matrix = cartan.cartan_matrix()
    rows = [[int(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]
    return {'type': str(cartan), 'cartan': rows}, '\n'.join(' '.join('%3d' % x for x in row) for row in rows)


TYPE = (('type',), {'help': 'Cartan type, e.g. A3, G2, D5 (case insensitive).'})


class FlagCommand(Command):
    NAME = 'flag'
    HELP = 'models of full flag varieties G/B and projective spaces.'
    OPERATORS = {
        'build': {
            'func': flag_build,
            'help': 'variety model of G/B for a Cartan type.',
            'arguments': [TYPE],
            'parse': KwargParse().add('type', 'cartan', convert=flag.CartanType.parse),
            'document': True,
        },
        'projective': {
            'func': flag_projective,
            'help': 'variety model of P^n.',
            'arguments': [(('n',), {'help': 'dimension.'})],
            'parse': KwargParse().add('n', None, convert=lambda n: generic.to_integer(n, 'n')),
            'document': True,
        },
        'cartan': {
            'func': flag_cartan,
            'help': 'Cartan matrix of a type.',
            'arguments': [TYPE],
            'parse': KwargParse().add('type', 'cartan', convert=flag.CartanType.parse),
        },
    }


# ----------------------------------------------------------------------------------------------------------------------
# TORIC:
# ----------------------------------------------------------------------------------------------------------------------
def toric_validate(fan):
    return _report(toric.validate_fan(fan))


def toric_walls(fan):
    # Walls of an invalid fan are meaningless, report every violation instead.
    toric.validate_fan(fan).raise_for_violations()
    walls = toric.enumerate_walls(fan)
    return list(walls), '%d walls' % len(walls)


def toric_degrees(fan, D):
    degrees = toric.divisor_degrees(fan, D)
    return {'degrees': degrees}, '\n'.join('%s: %s' % (name, a) for name, a in degrees.items())


def toric_oracle(fan):
    """
    Table of D_rho.C_w computed independently of the wall relations, one row per ray and wall.
    :param fan: fan.
    :return:    rows and message.
    """
    toric.validate_fan(fan).raise_for_violations()
    numbers = toric.intersection_numbers_by_linear_equivalence(fan)
    rows = [{'ray': i, 'wall': name, 'number': q} for (i, name), q in sorted(numbers.items())]
    return rows, '%d intersection numbers' % len(rows)


def toric_nef(fan, D):
    nef = toric.nef_check_toric(fan, D)
    return {'nef': nef}, 'nef: %s' % str(nef).lower()


def toric_seshadri(fan, D, cone):
    if cone is None:
        raise InputError('(ToricCommand): --cone is required.')
    value = toric.seshadri_toric_fixed_point(fan, D, cone)
    message = 'seshadri constant at the fixed point of cone %d: %s' % (cone, text(value))
    return {'seshadri': value, 'cone': cone}, message


class ToricCommand(Command):
    NAME = 'toric'
    HELP = 'torus invariant divisors on complete smooth toric varieties.'
    OPERATORS = {
        'validate': {
            'func': toric_validate,
            'help': 'validate a fan.',
            'arguments': [FILE],
            'parse': KwargParse().add('file', 'fan', convert=load_fan),
        },
        # Walls with their relations u + u' = sum b_i u_i.
        'walls': {
            'func': toric_walls,
            'help': 'walls of a fan with their relations.',
            'arguments': [FILE],
            'parse': KwargParse().add('file', 'fan', convert=load_fan),
            'document': True,
        },
        'degrees': {
            'func': toric_degrees,
            'help': 'degree of a divisor on every wall curve.',
            'arguments': [FILE, TORIC_DIVISOR],
            'parse': KwargParse().add('file', 'fan', convert=load_fan).add('D', None, convert=toric.ToricDivisor.parse),
        },
        # Brute force intersection numbers from linear equivalence.
        'oracle': {
            'func': toric_oracle,
            'help': 'every D_rho.C_w from linear equivalence.',
            'arguments': [FILE],
            'parse': KwargParse().add('file', 'fan', convert=load_fan),
            'document': True,
        },
        'nef': {
            'func': toric_nef,
            'help': 'nefness of a toric divisor.',
            'arguments': [FILE, TORIC_DIVISOR],
            'parse': KwargParse().add('file', 'fan', convert=load_fan).add('D', None, convert=toric.ToricDivisor.parse),
        },
        'seshadri': {
            'func': toric_seshadri,
            'help': 'Seshadri constant of a nef divisor at a torus fixed point.',
            'arguments': [FILE, TORIC_DIVISOR, CONE],
            'parse': KwargParse().add('file', 'fan', convert=load_fan).add('D', None, convert=toric.ToricDivisor.parse)
            .add('cone', None, None, index),
        },
    }


# ----------------------------------------------------------------------------------------------------------------------
# CONE:
# ----------------------------------------------------------------------------------------------------------------------
def cone_dual(cone):
    dual = dual_cone(cone)
    return dual, 'dual cone with %d generators' % len(dual.generators)


def cone_contains(cone, v):
    inside = contains(cone, v)
    return {'contains': inside}, 'contains: %s' % str(inside).lower()


def cone_equal(first, second):
    equal = cones_equal(first, second)
    return {'equal': equal}, 'equal: %s' % str(equal).lower()


class ConeCommand(Command):
    NAME = 'cone'
    HELP = 'rational polyhedral cones.'
    OPERATORS = {
        'dual': {
            'func': cone_dual,
            'help': 'dual cone.',
            'arguments': [FILE],
            'parse': KwargParse().add('file', 'cone', convert=load_cone),
            'document': True,
        },
        'contains': {
            'func': cone_contains,
            'help': 'membership of a rational vector.',
            'arguments': [FILE, (('--v',), {'required': True, 'help': 'vector, e.g. 1,1/2,-1 (use --v=-1,2 for a '
                                                                      'leading minus).'})],
            'parse': KwargParse().add('file', 'cone', convert=load_cone).add('v', None, convert=generic.parse_vector),
        },
        'equal': {
            'func': cone_equal,
            'help': 'semantic equality of two cones.',
            'arguments': [(('first',), {'help': 'first cone file (- for stdin).'}),
                          (('second',), {'help': 'second cone file.'})],
            'parse': KwargParse().add('first', None, convert=load_cone).add('second', None, convert=load_cone),
        },
    }


# ----------------------------------------------------------------------------------------------------------------------
# BLOWUP:
# ----------------------------------------------------------------------------------------------------------------------
NOT_NEF = '%s is not nef on the blow-up: it pairs negatively with %s. In particular Bl*D_j - E meets every strict ' \
          'transform C_i~ with i != j in -1, so it is not a nef line bundle although D_j is globally generated.'


def blowup_pairing(model, sink=None):
    bm = blowup.build_blowup(model, sink)
    return bm, 'pairing of the blow-up of %s at %s' % (model.name, bm.sink_label)


def blowup_nefcone(model, sink=None):
    cone = blowup.blowup_nef_generators(blowup.build_blowup(model, sink))
    return cone, 'nef cone with %d generators' % len(cone.generators)


def blowup_moricone(model, sink=None):
    cone = blowup.blowup_mori_generators(blowup.build_blowup(model, sink))
    return cone, 'Mori cone with %d generators' % len(cone.generators)


def _divisor_text(bm, b, c):
    """
    Readable sum b_i Bl*D_i - c E.
    """
    terms = ['%s %s' % (text(x), label) for x, label in zip(b, bm.divisor_labels)]
    return ' + '.join(terms) + ' - %s E' % text(c)


def blowup_isnef(model, b, c, sink=None):
    """
    Nefness of sum b_i Bl*D_i - c E. A negative answer names the Mori generators it pairs negatively with.
    :param model:   variety model.
    :param b:       coefficients of the pulled back divisors.
    :param c:       coefficient of -E.
    :param sink:    optional divisor index whose sink is blown up.
    :return:        payload and message.
    """
    bm = blowup.build_blowup(model, sink)
    nef = blowup.is_nef_on_blowup(bm, b, c)
    # Witnesses of a failure.
    negative = [] if nef else list(blowup.negative_curves(bm, b, c))
    payload = {'nef': nef, 'negative_curves': negative}
    if nef:
        return payload, 'nef: true'
    return payload, 'nef: false\n' + NOT_NEF % (_divisor_text(bm, b, c), generic.content(negative))


def blowup_decompose(model, b, c, sink=None):
    """
    Coordinates of a nef class in the nef generators sum Bl*D_i - E, Bl*D_1, ..., Bl*D_{r-1}.
    """
    bm = blowup.build_blowup(model, sink)
    coefficients = blowup.decompose_nef_class(bm, b, c)
    basis = ['sum Bl*D_i - E'] + list(bm.divisor_labels[:-1])
    message = ' + '.join('%s (%s)' % (text(x), g) for x, g in zip(coefficients, basis))
    return {'basis': basis, 'coefficients': list(coefficients)}, message


def blowup_seshadri(model, L, sink=None):
    bm = blowup.build_blowup(model, sink)
    value = blowup.seshadri_via_blowup(bm, L)
    return {'seshadri': value, 'point': bm.sink_label}, 'seshadri constant at %s: %s' % (bm.sink_label, text(value))


class BlowupCommand(Command):
    NAME = 'blowup'
    HELP = 'nef and Mori cones of the blow-up at the sink.'
    OPERATORS = {
        'pairing': {
            'func': blowup_pairing,
            'help': 'bases and intersection pairing of the blow-up.',
            'arguments': [FILE, SINK],
            'parse': KwargParse().add('file', 'model', convert=load_model).add('sink', None, None, index),
            'document': True,
        },
        'nefcone': {
            'func': blowup_nefcone,
            'help': 'nef cone in the basis Bl*D_1, ..., Bl*D_r, E.',
            'arguments': [FILE, SINK],
            'parse': KwargParse().add('file', 'model', convert=load_model).add('sink', None, None, index),
            'document': True,
        },
        'moricone': {
            'func': blowup_moricone,
            'help': 'Mori cone in the basis C_1~, ..., C_r~, e.',
            'arguments': [FILE, SINK],
            'parse': KwargParse().add('file', 'model', convert=load_model).add('sink', None, None, index),
            'document': True,
        },
        # sum b_i Bl*D_i - c E with its negative curves.
        'isnef': {
            'func': blowup_isnef,
            'help': 'nefness of sum b_i Bl*D_i - c E.',
            'arguments': [FILE, B, C, SINK],
            'parse': KwargParse().add('file', 'model', convert=load_model).add('b', None, convert=generic.parse_vector)
            .add('c', None, convert=generic.to_fraction).add('sink', None, None, index),
        },
        'decompose': {
            'func': blowup_decompose,
            'help': 'coefficients of a nef class on the nef generators.',
            'arguments': [FILE, B, C, SINK],
            'parse': KwargParse().add('file', 'model', convert=load_model).add('b', None, convert=generic.parse_vector)
            .add('c', None, convert=generic.to_fraction).add('sink', None, None, index),
        },
        'seshadri': {
            'func': blowup_seshadri,
            'help': 'Seshadri constant as the largest nef twist Bl*L - lambda E.',
            'arguments': [FILE, DIVISOR, SINK],
            'parse': model_with_divisor()
            .add('sink', None, None, index),
        },
    }


# ----------------------------------------------------------------------------------------------------------------------
# BUNDLE:
# ----------------------------------------------------------------------------------------------------------------------
def bundle_validate(space, bundle):
    return _report(bundles.validate_splitting(space, bundle))


def bundle_nef(space, bundle):
    nef = bundles.nef_check_bundle(space, bundle)
    return {'nef': nef}, 'nef: %s' % str(nef).lower()


def bundle_ample(space, bundle):
    ample = bundles.ample_check_bundle(space, bundle)
    return {'ample': ample}, 'ample: %s' % str(ample).lower()


def bundle_seshadri(space, bundle, cone=None):
    # Fans need the maximal cone of the fixed point, models always use the sink.
    value = bundles.seshadri_bundle(space, bundle, cone)
    return {'seshadri': value}, 'seshadri constant: %s' % text(value)


class BundleCommand(Command):
    NAME = 'bundle'
    HELP = 'equivariant vector bundles given by splitting types.'
    OPERATORS = {
        'validate': {
            'func': bundle_validate,
            'help': 'coverage and c1 consistency of splitting data.',
            'arguments': [FILE, BUNDLE],
            'parse': KwargParse().add('file', 'space', convert=load_space).add('bundle', None, convert=load_bundle),
        },
        'nef': {
            'func': bundle_nef,
            'help': 'nefness of a bundle.',
            'arguments': [FILE, BUNDLE],
            'parse': KwargParse().add('file', 'space', convert=load_space).add('bundle', None, convert=load_bundle),
        },
        'ample': {
            'func': bundle_ample,
            'help': 'ampleness of a bundle on a variety model.',
            'arguments': [FILE, BUNDLE],
            'parse': KwargParse().add('file', 'space', convert=load_space).add('bundle', None, convert=load_bundle),
        },
        'seshadri': {
            'func': bundle_seshadri,
            'help': 'Seshadri constant of a nef bundle at the sink or a torus fixed point.',
            'arguments': [FILE, BUNDLE, CONE],
            'parse': KwargParse().add('file', 'space', convert=load_space).add('bundle', None, convert=load_bundle)
            .add('cone', None, None, index),
        },
    }


# Define all commands by name.
COMMANDS = {cls.NAME: cls for cls in (ModelCommand, FlagCommand, ToricCommand, ConeCommand, BlowupCommand,
                                      BundleCommand)}
