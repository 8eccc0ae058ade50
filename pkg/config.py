import configparser
import os
from pathlib import Path

DEFAULTS = {
    'django': {
        'settings_module': 'harm_site.settings',
    },
    'engine': {
        'max_group_order': '10000',
        'max_matrix_entries': '50000000',
        'policy': 'auto',
        'elimination': 'exact',
    },
    'cli': {
        'jobs': '0',
        'cache': '~/.cache/harm-tools/components.jsonl',
    },
    'logging': {
        'dir': '~/.cache/harm-tools/logs',
        'level': 'INFO',
    },
}


def config_path():
    return os.environ.get('HARM_CONFIG') or (Path.home() / '.config/harm-tools/config.ini').as_posix()


def get_config():
    """Read and parse the application's config file, on top of DEFAULTS.

    The file names the settings module that gets imported, so it must
    not be writable by anyone but its owner.  A missing file leaves the
    defaults in place.
    """
    config = configparser.ConfigParser()
    config.read_dict(DEFAULTS)
    ini_path = config_path()
    if os.path.exists(ini_path):
        ini_mode = os.stat(ini_path).st_mode
        if ini_mode & 0o22:
            raise RuntimeError("%s has mode %o: writing by non-owner disallowed" %
                               (ini_path, ini_mode))
        config.read(ini_path)
    return config
