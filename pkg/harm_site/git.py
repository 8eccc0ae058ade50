# Utilities for interfacing with git source control.

import logging

import sh

logger = logging.getLogger('harm_site.git')

UNKNOWN = 'unknown'


def get_info(path=None):
    """Returns a string describing the current state of the checked-out
    source tree, for stamping into reports, or 'unknown' outside a git
    checkout."""

    try:
        # pylint: disable=too-many-function-args
        output = sh.git('status', '--porcelain=v2', '-b', _cwd=path, _tty_out=False)
    except (sh.ErrorReturnCode, sh.CommandNotFound) as error:
        logger.debug('no git information: %s', error)
        return UNKNOWN
    return parse_output(str(output).splitlines(keepends=True))


def parse_output(output):
    dirty = False
    data = {}
    for line in output:
        if line.startswith('#'):
            _, key, value = line.rstrip().split(' ', 2)
            data[key] = value
        elif line.strip():
            dirty = True
    if 'branch.oid' not in data:
        return UNKNOWN
    return f"{data.get('branch.head', '(detached)')} ({data['branch.oid']}{'+' if dirty else ''})"
