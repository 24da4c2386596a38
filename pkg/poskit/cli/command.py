# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import sys
import json
import argparse
from abc import ABC
from fractions import Fraction
from typing import Any
from dataclasses import dataclass
from poskit.common import Common, KwargParse, InputError
from poskit.common import generic


# Exit code of every command status.
EXIT_CODES = {'ok': 0, 'input_error': 2, 'refused': 3, 'internal_error': 4}


def jsonable(value):
    """
    Convert payload values into json values, exact rationals become {"num", "den"}.
    :param value:   payload value.
    :return:        json value.
    """
    if isinstance(value, Fraction):
        return generic.rational_to_json(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'to_json'):
        return jsonable(value.to_json())
    return value


@dataclass
class CommandResult:
    """
    Outcome of one command: status, operation specific payload and a human readable message.
    ---------
    @author:    Poskit Authors.
    @created:   16th October, 2026.
    """
    status: str
    payload: Any = None
    message: str = ''
    document: bool = False

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> dict:
        return {'status': self.status, 'payload': jsonable(self.payload), 'message': self.message}

    def render(self, as_json=False) -> str:
        """
        Text for stdout. Documents (models, cones, reports) are printed as json in both modes so they can be piped.
        :param as_json: json output mode.
        :return:        rendered text.
        """
        if as_json:
            return json.dumps(self.to_json(), indent=2)
        if self.status == 'ok' and self.document:
            return json.dumps(jsonable(self.payload), indent=2)
        return self.message


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser raising input errors instead of exiting.
    """
    def error(self, message):
        raise InputError('(%s): %s' % (self.prog, message))


def read_json(path=None):
    """
    Load UTF-8 json from a file or from stdin ('-' or nothing). A piped command result is unwrapped to its payload.
    :param path:    file path.
    :return:        json value.
    """
    try:
        if path is None or path == '-':
            text = sys.stdin.read()
            source = 'stdin'
        else:
            with open(path, 'r', encoding='utf-8') as handle:
                text = handle.read()
            source = path
    except (OSError, UnicodeDecodeError) as error:
        raise InputError('cannot read %s: %s.' % (path, error))
    try:
        value = json.loads(text)
    except json.JSONDecodeError as error:
        offset = len(text[:error.pos].encode('utf-8'))
        raise InputError('malformed json in %s at byte offset %d: %s.' % (source, offset, error.msg))
    if isinstance(value, dict) and set(value) == {'status', 'payload', 'message'}:
        if value['status'] != 'ok':
            raise InputError('piped command failed with status %s: %s' % (value['status'], value['message']))
        value = value['payload']
    return value


class Command(Common, ABC):
    """
    Basic command which is base class of all subcommands. Every action of a command is declared in OPERATORS with
    the function it calls, its command line arguments and a kwarg parser mapping parsed arguments to the function.
    ---------
    @author:    Poskit Authors.
    @created:   16th October, 2026.
    """
    NAME = None
    HELP = None
    # Define available operators.
    OPERATORS = dict()

    def kwargparser(self, action) -> KwargParse:
        """
        Get keyword arguments parser of an action.
        :param action:  name of action.
        :return:        keyword arguments parser.
        """
        return self.OPERATORS[action].get('parse', KwargParse())

    def register(self, subparsers, parents):
        """
        Add the command and its actions to the command line parser.
        :param subparsers:  subparsers of the main parser.
        :param parents:     parsers holding options shared by every leaf.
        :return:            command itself as facade pattern.
        """
        parser = subparsers.add_parser(self.NAME, help=self.HELP, parents=parents)
        actions = parser.add_subparsers(dest='action', metavar='ACTION', parser_class=ArgumentParser)
        actions.required = True
        for action, ops in self.OPERATORS.items():
            leaf = actions.add_parser(action, help=ops.get('help'), parents=parents)
            for flags, options in ops.get('arguments', []):
                leaf.add_argument(*flags, **options)
            leaf.set_defaults(command=self)
        return self

    def call(self, action, **kwargs) -> CommandResult:
        """
        Run an action.
        :param action:  name of action.
        :param kwargs:  parsed command line arguments.
        :return:        command result.
        """
        ops = self.OPERATORS
        if action not in ops:
            raise self.input_error('action %s not found. Try again with %s.' % (
                action, generic.content(list(ops.keys()), end=' or ')))
        args = self.kwargparser(action).parse(None, **kwargs)
        payload, message = ops[action]['func'](**args)
        return CommandResult('ok', payload, message, document=ops[action].get('document', False))
