# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
import os
from configparser import ConfigParser
from functools import lru_cache

PRECISION_ENVIRON = 'DIFFRESOLVENT_PRECISION'


@lru_cache(maxsize=None)
def _config():
    config = ConfigParser()
    path = os.path.join(os.path.dirname(__file__), 'resolvent.cfg')
    with open(path, encoding='utf-8') as fp:
        config.read_file(fp)
    return config


def get(option, default=None):
    return _config().get('defaults', option, fallback=default)


def getint(option, default=None):
    return _config().getint('defaults', option, fallback=default)


def getfloat(option, default=None):
    return _config().getfloat('defaults', option, fallback=default)


def version():
    return _config().get('resolvent', 'version')


def precision():
    "Decimal digits for numeric evaluation, the environment wins"
    value = os.environ.get(PRECISION_ENVIRON)
    if value:
        return int(value)
    return getint('precision', 30)
