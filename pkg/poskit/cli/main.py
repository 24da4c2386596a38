# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import sys
import logging
import argparse
import poskit
from poskit.common import PoskitError
from poskit.cli.command import ArgumentParser, CommandResult
from poskit.cli.commands import COMMANDS


logger = logging.getLogger(__name__)


EPILOG = 'exit codes: 0 ok, 2 input error, 3 refused (a theorem hypothesis does not hold), 4 internal error.'


def build_parser() -> ArgumentParser:
    """
    Command line parser of every command and action. --json and --verbose are accepted on every level.
    :return:    argument parser.
    """
    parser = ArgumentParser(prog='poskit', description='Positivity of line and vector bundles on simple G-varieties '
                                                       'and smooth toric varieties.', epilog=EPILOG)
    parser.add_argument('--version', action='version', version='%(prog)s ' + poskit.__version__)
    parser.add_argument('--json', action='store_true', help='print the full command result as json.')
    parser.add_argument('--verbose', action='store_true', help='debug logging on stderr.')
    # Leaves repeat the options without defaults so a top level value is kept.
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--json', action='store_true', default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    shared.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    subparsers = parser.add_subparsers(dest='subcommand', metavar='COMMAND', parser_class=ArgumentParser)
    subparsers.required = True
    for command in COMMANDS.values():
        command().register(subparsers, [shared])
    return parser


def configure_logging(verbose=False):
    """
    Log records go to stderr so stdout only carries results.
    """
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def run(argv=None) -> CommandResult:
    """
    Parse a command line and run it. Every failure is turned into a command result with its status.
    :param argv:    arguments without the program name, sys.argv when None.
    :return:        command result.
    """
    try:
        namespace = build_parser().parse_args(argv)
        kwargs = dict(vars(namespace))
        command, action = kwargs.pop('command'), kwargs.pop('action')
        configure_logging(kwargs.pop('verbose', False))
        logger.debug('running %s %s', kwargs.pop('subcommand'), action)
        return command.call(action, **kwargs)
    except PoskitError as error:
        logger.debug('%s: %s', error.status, error)
        return CommandResult(error.status, None, str(error))
    except Exception as error:
        # Anything else is a bug of ours, never of the input.
        logger.exception('unexpected failure')
        return CommandResult('internal_error', None, 'internal error: %s: %s' % (type(error).__name__, error))


def main(argv=None) -> int:
    """
    Console entry point: print the result on stdout and return the exit code.
    :param argv:    arguments without the program name.
    :return:        exit code.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    result = run(argv)
    as_json = '--json' in argv
    stream = sys.stdout if result.status == 'ok' or as_json else sys.stderr
    print(result.render(as_json), file=stream)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
