"""
Django settings for the harm-tools project.

There is no web surface; everything runs through manage.py commands.
Values that users are expected to change come from config.get_config().
"""

import os
import sys

from config import get_config
import harm_site.git
from harmonics.engine import ENGINE_VERSION


BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

CONFIG = get_config()

VERSION_ID = harm_site.git.get_info(BASE_DIR)

# True if running unit tests
TESTING = os.environ.get('HARM_TESTING') == '1' or sys.argv[1:2] == ['test']

SECRET_KEY = 'harm-tools has no sessions or signed data'

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'exact_arith',
    'symfunc',
    'groups',
    'harmonics',
    'universal',
    'harm_cli',
    'harm_site.apps.HarmSiteConfig',
]

MIDDLEWARE = []

DATABASES = {}

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.jinja2.Jinja2',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'environment': 'harm_site.jinja2.environment',
            'autoescape': False,
            'trim_blocks': True,
            'lstrip_blocks': True,
        },
    },
]


# Engine limits and CLI defaults.  The engine itself never reads these;
# commands turn them into a harmonics.engine.Limits.
HARM_MAX_GROUP_ORDER = CONFIG.getint('engine', 'max_group_order')
HARM_MAX_MATRIX_ENTRIES = CONFIG.getint('engine', 'max_matrix_entries')
HARM_POLICY = CONFIG.get('engine', 'policy')
HARM_ELIMINATION = CONFIG.get('engine', 'elimination')
HARM_JOBS = CONFIG.getint('cli', 'jobs')
HARM_CACHE_PATH = os.path.expanduser(os.environ.get('HARM_CACHE') or CONFIG.get('cli', 'cache'))

# Component cache.  VERSION is the engine tag, so results from another
# engine version are never hits.
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
    },
    'components': {
        'BACKEND': 'django.core.cache.backends.dummy.DummyCache' if TESTING else 'harm_cli.cache.JsonLinesCache',
        'LOCATION': HARM_CACHE_PATH,
        'VERSION': ENGINE_VERSION,
    },
}


TIME_ZONE = 'UTC'

USE_TZ = True


LOG_DIR = os.path.expanduser(CONFIG.get('logging', 'dir'))
LOG_NAME = 'harm-test.log' if TESTING else 'harm.log'
LOG_LEVEL = CONFIG.get('logging', 'level')

if not TESTING:
    os.makedirs(LOG_DIR, exist_ok=True)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'file': {
            'level': 'DEBUG',
            'class': 'logging.NullHandler',
        } if TESTING else {
            'level': LOG_LEVEL,
            'class': 'logging.handlers.TimedRotatingFileHandler',
            'filename': os.path.join(LOG_DIR, LOG_NAME),
            'when': 'D',
            'backupCount': 7,
            'utc': True,
            'formatter': 'file_formatter',
        },
        'stderr': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'stderr_formatter',
        },
    },
    'formatters': {
        'file_formatter': {
            'format': '%(asctime)s [%(process)d] %(levelname)s %(name)s: %(message)s',
        },
        'stderr_formatter': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': True,
        },
        'exact_arith': {
            'handlers': ['file', 'stderr'],
            'level': 'INFO',
            'propagate': True,
        },
        'symfunc': {
            'handlers': ['file', 'stderr'],
            'level': 'INFO',
            'propagate': True,
        },
        'groups': {
            'handlers': ['file', 'stderr'],
            'level': 'INFO',
            'propagate': True,
        },
        'harmonics': {
            'handlers': ['file', 'stderr'],
            'level': 'INFO',
            'propagate': True,
        },
        'universal': {
            'handlers': ['file', 'stderr'],
            'level': 'INFO',
            'propagate': True,
        },
        'harm_cli': {
            'handlers': ['file', 'stderr'],
            'level': 'DEBUG',
            'propagate': True,
        },
        'harm_site': {
            'handlers': ['file', 'stderr'],
            'level': 'INFO',
            'propagate': True,
        },
    },
}
