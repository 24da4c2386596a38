# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import io
import json
import pytest
from poskit.cli import run, main, build_parser, CommandResult, EXIT_CODES


@pytest.fixture
def write(tmp_path):
    def writer(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding='utf-8')
        return str(path)
    return writer


@pytest.fixture
def stdin(monkeypatch):
    def feed(text):
        monkeypatch.setattr('sys.stdin', io.StringIO(text))
    return feed


@pytest.fixture
def p2_file(write, p2):
    return write('p2.json', p2.to_json())


@pytest.fixture
def a2_file(write, a2):
    return write('a2.json', a2.to_json())


class TestCommandResult:
    def test_exit_codes(self):
        assert EXIT_CODES == {'ok': 0, 'input_error': 2, 'refused': 3, 'internal_error': 4}
        assert CommandResult('refused', None, 'no').exit_code == 3

    def test_parser_lists_every_command(self):
        text = build_parser().format_help()
        for name in ('model', 'flag', 'toric', 'cone', 'blowup', 'bundle'):
            assert name in text


class TestPiping:
    def test_flag_build_into_blowup_seshadri(self, stdin):
        built = run(['flag', 'build', 'A3'])
        assert built.status == 'ok'
        stdin(built.render())
        result = run(['blowup', 'seshadri', '--L', '3,1,2'])
        assert result.status == 'ok'
        assert result.payload['seshadri'] == 1
        assert result.to_json()['payload']['seshadri'] == {'num': 1, 'den': 1}

    def test_json_output_can_be_piped(self, stdin):
        stdin(run(['flag', 'build', 'G2', '--json']).render(as_json=True))
        result = run(['model', 'nef', '-', '--L', '1,0'])
        assert result.payload == {'nef': True}

    @pytest.mark.parametrize('argv', [
        ['model', 'validate'],
        ['model', 'seshadri', '--L', '2,2', '--sink', '1'],
        ['blowup', 'nefcone'],
        ['blowup', 'moricone', '--sink', '0'],
        ['blowup', 'pairing'],
        ['blowup', 'decompose', '--b', '2,3', '--c', '1'],
    ])
    def test_flag_build_feeds_every_model_command(self, stdin, argv):
        stdin(run(['flag', 'build', 'A2']).render())
        assert run(argv).status == 'ok'

    def test_cone_output_is_a_cone(self, stdin, a2_file):
        stdin(run(['blowup', 'nefcone', a2_file]).render())
        result = run(['cone', 'dual'])
        assert result.status == 'ok'
        assert len(result.payload.generators) == 3


class TestCommands:
    def test_toric_seshadri_of_zero_divisor(self, p2_file):
        result = run(['toric', 'seshadri', p2_file, '--D', '0,0,0', '--cone', '0'])
        assert result.status == 'ok'
        assert result.payload['seshadri'] == 0
        assert result.message.endswith(': 0')

    def test_toric_seshadri_needs_a_cone(self, p2_file):
        assert run(['toric', 'seshadri', p2_file, '--D', '0,0,0']).status == 'input_error'

    def test_blowup_isnef_names_the_negative_curves(self, a2_file):
        result = run(['blowup', 'isnef', a2_file, '--b', '1,0', '--c', '1'])
        assert result.status == 'ok'
        assert result.payload == {'nef': False, 'negative_curves': ['C2~']}
        assert 'not a nef line bundle' in result.message
        assert result.message.startswith('nef: false')

    def test_model_commands(self, a2_file):
        assert run(['model', 'intersect', a2_file, '--L', '3,4', '--curve', 'C2']).payload['degree'] == 4
        assert run(['model', 'ample', a2_file, '--L', '0,4']).payload == {'ample': False}
        assert run(['model', 'ratios', a2_file, '--L', '3,4']).message == 'C1: 3\nC2: 4'

    def test_text_and_json_agree(self, a2_file):
        result = run(['model', 'seshadri', a2_file, '--L', '3/2,5'])
        assert result.message == 'seshadri constant at x^-: 3/2'
        assert result.to_json()['payload']['seshadri'] == {'num': 3, 'den': 2}

    def test_toric_commands(self, p2_file):
        walls = run(['toric', 'walls', p2_file])
        assert [w['name'] for w in json.loads(walls.render())] == ['W0', 'W1', 'W2']
        assert run(['toric', 'degrees', p2_file, '--D', '1,0,0']).payload == {'degrees': {'W0': 1, 'W1': 1, 'W2': 1}}
        assert run(['toric', 'nef', p2_file, '--D=-1,0,0']).payload == {'nef': False}
        oracle = json.loads(run(['toric', 'oracle', p2_file]).render())
        assert len(oracle) == 9
        assert run(['toric', 'validate', p2_file]).payload['passed']

    def test_flag_commands(self):
        assert run(['flag', 'cartan', 'g2']).payload == {'type': 'G2', 'cartan': [[2, -1], [-3, 2]]}
        assert run(['flag', 'projective', '3']).payload.name == 'P^3'
        assert run(['flag', 'build', 'Z9']).status == 'input_error'

    def test_cone_commands(self, write):
        cone = write('cone.json', {'dim': 2, 'generators': [[1, 0], [1, 1]]})
        other = write('other.json', {'dim': 2, 'generators': [[2, 2], [1, 0], [3, 1]]})
        assert run(['cone', 'contains', cone, '--v', '2,1']).payload == {'contains': True}
        assert run(['cone', 'contains', cone, '--v=-1,1']).payload == {'contains': False}
        assert run(['cone', 'equal', cone, other]).payload == {'equal': True}
        assert json.loads(run(['cone', 'dual', cone]).render()) == {'dim': 2, 'generators': [[0, 1], [1, -1]]}

    def test_bundle_on_a_fan(self, write, p2_file):
        bundle = write('tangent.json', {'rank': 2, 'c1': [1, 1, 1], 'per_curve': {'W0': [1, 2], 'W1': [2, 1],
                                                                                   'W2': [1, 2]}})
        assert run(['bundle', 'validate', p2_file, '--bundle', bundle]).status == 'ok'
        assert run(['bundle', 'nef', p2_file, '--bundle', bundle]).payload == {'nef': True}
        assert run(['bundle', 'seshadri', p2_file, '--bundle', bundle, '--cone', '1']).payload == {'seshadri': 1}
        assert run(['bundle', 'ample', p2_file, '--bundle', bundle]).status == 'refused'

    def test_bundle_on_a_model(self, write, a2_file):
        bundle = write('bundle.json', {'rank': 2, 'c1': [3, 2], 'per_curve': {'C1': [1, 2], 'C2': [1, 1]}})
        assert run(['bundle', 'ample', a2_file, '--bundle', bundle]).payload == {'ample': True}
        assert run(['bundle', 'seshadri', a2_file, '--bundle', bundle]).payload == {'seshadri': 1}


class TestErrors:
    def test_unknown_subcommand(self):
        result = run(['plot'])
        assert result.status == 'input_error'
        assert result.exit_code == 2

    def test_unknown_action(self):
        assert run(['toric', 'draw']).status == 'input_error'

    def test_malformed_json_reports_byte_offset(self, write):
        path = write('bad.json', '{"name": "é", x}')
        result = run(['model', 'validate', path])
        assert result.status == 'input_error'
        assert 'byte offset 15' in result.message

    def test_missing_file(self, tmp_path):
        assert run(['model', 'validate', str(tmp_path / 'none.json')]).status == 'input_error'

    def test_invalid_model(self, write, model_json):
        model_json['curves'][0]['class'] = [1, 1]
        result = run(['model', 'validate', write('bad.json', model_json)])
        assert result.status == 'input_error'
        assert 'distinguished' in result.message

    def test_refusal_cites_hypothesis(self, a2_file):
        result = run(['model', 'seshadri', a2_file, '--L', '0,1'])
        assert result.status == 'refused'
        assert result.exit_code == 3
        assert 'ample' in result.message

    def test_float_is_refused(self, a2_file):
        assert run(['model', 'nef', a2_file, '--L', '0.5,1']).status == 'input_error'

    def test_nested_curve_class(self, write, model_json):
        model_json['curves'][0]['class'] = [[1], 0]
        result = run(['model', 'nef', write('nested.json', model_json), '--L', '1,1'])
        assert result.status == 'input_error'
        assert 'list of integers' in result.message

    def test_nested_rank(self, write, model_json):
        model_json['rank'] = [2]
        assert run(['model', 'validate', write('nested.json', model_json)]).exit_code == 2

    def test_nested_ray(self, write):
        fan = write('fan.json', {'dim': 2, 'rays': [[[1], 0], [0, 1], [-1, -1]], 'max_cones': [[0, 1], [1, 2], [0, 2]]})
        result = run(['toric', 'validate', fan])
        assert result.status == 'input_error'
        assert 'rays' in result.message

    def test_nested_splitting_degrees(self, write, a2_file):
        bundle = write('bundle.json', {'rank': 1, 'c1': [1, 0], 'per_curve': {'C1': [[1]], 'C2': [0]}})
        result = run(['bundle', 'nef', a2_file, '--bundle', bundle])
        assert result.status == 'input_error'
        assert 'per_curve' in result.message

    def test_unexpected_failure_is_internal_error(self, a2_file, monkeypatch):
        def broken(model, L):
            raise ZeroDivisionError('division by zero')
        monkeypatch.setattr('poskit.variety.model.seshadri_line', broken)
        result = run(['model', 'seshadri', a2_file, '--L', '2,5'])
        assert result.status == 'internal_error'
        assert result.exit_code == 4
        assert 'ZeroDivisionError' in result.message

    def test_dimension_bound_from_environment(self, write, monkeypatch):
        cone = write('cone.json', {'dim': 3, 'generators': [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
        monkeypatch.setenv('POSKIT_MAX_CONE_DIM', '2')
        assert run(['cone', 'dual', cone]).status == 'refused'


class TestMain:
    def test_json_flag_anywhere(self, a2_file, capsys):
        assert main(['--json', 'model', 'seshadri', a2_file, '--L', '2,5']) == 0
        before = json.loads(capsys.readouterr().out)
        assert main(['model', 'seshadri', a2_file, '--L', '2,5', '--json']) == 0
        after = json.loads(capsys.readouterr().out)
        assert before == after
        assert before['payload']['seshadri'] == {'num': 2, 'den': 1}

    def test_text_output(self, capsys):
        assert main(['flag', 'cartan', 'A2']) == 0
        assert capsys.readouterr().out.split() == ['2', '-1', '-1', '2']

    def test_errors_go_to_stderr(self, a2_file, capsys):
        assert main(['model', 'seshadri', a2_file, '--L', '0,1']) == 3
        captured = capsys.readouterr()
        assert captured.out == ''
        assert 'Refused' in captured.err
