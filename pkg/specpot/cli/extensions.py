"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 11, 2026

@author: specpot team
"""
from atom.api import Atom, Str, Callable, List

#: Exit codes
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class StopSystemExit(SystemExit):
    """ Tell the CLI Plugin to not exit
    after running the command.
    """


class CliCommand(Atom):
    #: The cli sub command name `specpot <name>`
    name = Str()

    #: The cli short description for this sub command
    desc = Str()

    #: The cli help text for this sub command
    help = Str()

    #: List of 2 item tuples of command arguments this command accepts.
    #: These are passed to the ArgumentParser.add_argument(args, **kwargs)
    args = List(tuple)

    #: Handler called when this command is invoked. It will be passed
    #: the `Command` instance that contains the parsed arguments.
    #: It may return an exit code.
    handler = Callable()
