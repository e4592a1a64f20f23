"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 2, 2026

@author: specpot team
"""
import os
import sys
import logging
import platform
import traceback
import faulthandler
from logging.handlers import RotatingFileHandler

#: Format shared by the file and console handlers
LOG_FORMAT = '%(asctime)-15s | %(levelname)-7s | %(name)s | %(message)s'

#: Rotate the log file at this size
LOG_MAX_BYTES = 10 * 1024 * 1024

LOG_BACKUPS = 10


def get_log_dir():
    """ SPECPOT_LOG_DIR or ~/.config/specpot/logs, created if missing """
    path = os.environ.get('SPECPOT_LOG_DIR',
                          os.path.expanduser('~/.config/specpot/logs'))
    os.makedirs(path, exist_ok=True)
    return path


def enable_crash_log(log_dir, debug):
    """ Dump tracebacks of hard crashes to crash.txt, or stderr in debug """
    try:
        target = (sys.stderr if debug else
                  open(os.path.join(log_dir, 'crash.txt'), 'a+'))
        faulthandler.enable(target)
    except Exception as e:
        sys.stderr.write("Warning: crash log disabled: {}\n".format(e))


def init_logging():
    """ Log everything to a rotating specpot.txt in the log dir. Only
    warnings reach stderr unless SPECPOT_DEBUG is set. Data goes to stdout so
    the console handler never writes there.

    """
    log_dir = get_log_dir()
    debug = 'SPECPOT_DEBUG' in os.environ
    enable_crash_log(log_dir, debug)

    formatter = logging.Formatter(LOG_FORMAT)
    handlers = [
        (RotatingFileHandler(os.path.join(log_dir, 'specpot.txt'),
                             maxBytes=LOG_MAX_BYTES,
                             backupCount=LOG_BACKUPS), logging.DEBUG),
        (logging.StreamHandler(sys.stderr),
         logging.DEBUG if debug else logging.WARNING),
    ]
    root = logging.getLogger()
    root.setLevel(logging.DEBUG)
    for handler, level in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        root.addHandler(handler)


def log_debug_info(log):
    """ Record the versions and arguments of this run """
    try:
        import numpy
        import scipy
        from specpot import version
        for key, value in (
                ('specpot', version),
                ('Python', sys.version),
                ('Platform', platform.platform()),
                ('Executable', sys.executable),
                ('Args', sys.argv),
                ('numpy', numpy.__version__),
                ('scipy', scipy.__version__)):
            log.info('{}: {}'.format(key, value))
    except Exception as e:
        log.exception(e)


def main():
    """ Run the command line with logging set up and exit with its code.
    Errors the commands do not handle are logged before they propagate.

    """
    init_logging()
    log = logging.getLogger('specpot')
    banner = '=' * 40
    log.info(banner)
    log_debug_info(log)
    log.info(banner)
    try:
        from specpot.cli.plugin import run_cli
        code = run_cli(sys.argv[1:])
    except Exception:
        log.error(traceback.format_exc())
        raise
    log.info('Exited with code {}'.format(code))
    log.info(banner)
    sys.exit(code)


if __name__ == '__main__':
    main()
