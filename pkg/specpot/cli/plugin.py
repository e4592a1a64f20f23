"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 11, 2026

@author: specpot team
"""
import sys
import traceback
from atom.api import Atom, Instance, List
from argparse import ArgumentParser, Namespace, ArgumentError
from specpot import version
from specpot.core.api import log, SpecpotError, ConfigError
from . import extensions
from .commands import COMMANDS


class CommandParser(ArgumentParser):
    """ Raise parser errors instead of exiting so the plugin can turn them
    into an exit code.

    """

    def error(self, message):
        exc = sys.exc_info()[1]
        if exc:
            raise exc
        raise ArgumentError(None, message)


class Command(Atom):
    """ Base class for a CLI command. """

    #: Reference to the declaration of this command
    declaration = Instance(extensions.CliCommand)

    #: Parsed args
    args = Instance(Namespace)

    #: Parser this command uses. Generated automatically.
    parser = Instance(ArgumentParser)

    def run(self, args):
        """ Invoke the command with the parsed arguments. The handler
        may raise a StopSystemExit if it doesn't want the process to exit.

        """
        self.args = args
        return self.declaration.handler(self)


class CliPlugin(Atom):
    """ Builds the parser from the declared commands and dispatches them """

    #: Root parser
    parser = Instance(ArgumentParser)

    #: Commands
    commands = List(Command)

    def _default_commands(self):
        return [Command(declaration=d) for d in COMMANDS]

    def _default_parser(self):
        """ Generate a parser using the command list """

        #: Create the root parser
        parser = CommandParser(prog='specpot')
        parser.add_argument('--version', action='version',
                            version='specpot {}'.format(version))

        #: Build parser, prepare commands
        subparsers = parser.add_subparsers(dest='command')
        for c in self.commands:
            d = c.declaration
            p = subparsers.add_parser(d.name, help=d.help,
                                      description=d.desc)
            c.parser = p
            for (flags, kwargs) in d.args:
                if isinstance(flags, str):
                    flags = (flags,)
                p.add_argument(*flags, **kwargs)
            p.set_defaults(cmd=c)

        return parser

    def run(self, argv):
        """ Parse argv and run the selected command.

        Returns
        -------
        code: int
            0 ok, 1 validation failure, 2 config or usage error and 3 for
            any other error.

        """
        try:
            args = self.parser.parse_args(argv)
        except (ArgumentError, SystemExit) as e:
            if isinstance(e, SystemExit) and not e.code:
                #: --help or --version
                return extensions.EXIT_OK
            log.error("CLI | {}".format(getattr(e, 'message', e)))
            return extensions.EXIT_CONFIG

        if not hasattr(args, 'cmd'):
            log.error("CLI | No command was given")
            self.parser.print_usage(sys.stderr)
            return extensions.EXIT_CONFIG

        cmd = args.cmd
        try:
            log.debug("CLI | Running command '{}' with args: {}".format(
                cmd.declaration.name, args))
            code = cmd.run(args)
            return extensions.EXIT_OK if code is None else int(code)
        except extensions.StopSystemExit:
            return extensions.EXIT_OK
        except ConfigError as e:
            log.error("CLI | {}".format(e))
            return extensions.EXIT_CONFIG
        except SpecpotError as e:
            log.error("CLI | {}".format(e))
            return extensions.EXIT_NUMERIC
        except Exception:
            log.error(traceback.format_exc())
            return extensions.EXIT_NUMERIC


def run_cli(argv=None):
    """ Run the command line with argv, sys.argv[1:] when None """
    if argv is None:
        argv = sys.argv[1:]
    return CliPlugin().run(list(argv))
