#!/usr/bin/env python
# encoding: utf-8

from setuptools import setup
import os
import io
from configparser import ConfigParser

MODULE = 'diffresolvent'
PREFIX = 'nantic'


def read(fname):
    return io.open(
        os.path.join(os.path.dirname(__file__), fname),
        'r', encoding='utf-8').read()


config = ConfigParser()
with open(os.path.join(MODULE, 'resolvent.cfg')) as fp:
    config.read_file(fp)
info = dict(config.items('resolvent'))
for key in ('depends', 'extras_depend'):
    if key in info:
        info[key] = info[key].strip().splitlines()

version = info.get('version', '0.0.1')

requires = info.get('depends', [])
tests_require = info.get('extras_depend', [])

setup(name='%s_%s' % (PREFIX, MODULE),
    version=version,
    description='Differential resolvents of pseudopolynomials',
    long_description=read('README'),
    author='NaN·tic',
    author_email='info@nan-tic.com',
    url='http://www.nan-tic.com/',
    download_url="https://github.com/Nan-tic/%s" % MODULE,
    packages=[
        MODULE,
        '%s.tests' % MODULE,
        ],
    package_data={
        MODULE: ['resolvent.cfg'],
        '%s.tests' % MODULE: ['fixtures/*.json'],
        },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    license='GPL-3',
    python_requires='>=3.9',
    install_requires=requires,
    extras_require={
        'test': tests_require,
        },
    zip_safe=False,
    entry_points="""
    [console_scripts]
    %s = %s.cli:main
    """ % (MODULE, MODULE),
    test_suite='%s.tests' % MODULE,
    tests_require=tests_require,
    )
