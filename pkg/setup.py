#!/usr/bin/env python3
# coding=utf-8
"""A setuptools-based script for installing Tukey FSBP.

For more information, see:

* https://packaging.python.org/en/latest/index.html
* https://docs.python.org/distutils/sourcedist.html
"""
from setuptools import find_packages, setup  # prefer setuptools over distutils


with open('README.rst') as handle:
    LONG_DESCRIPTION = handle.read()


with open('VERSION') as handle:
    VERSION = handle.read().strip()


setup(
    name='tukey-fsbp',
    version=VERSION,
    description=(
        'Exact Tukey depth, the Tukey median and its finite sample breakdown '
        'point'
    ),
    long_description=LONG_DESCRIPTION,
    license='GPLv3',
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        ('License :: OSI Approved :: GNU General Public License v3 or later '
         '(GPLv3+)'),
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
    packages=find_packages(include=['tukey_fsbp', 'tukey_fsbp.*']),
    install_requires=[
        'jsonschema',
        'numpy>=1.17',
        'packaging',
    ],
    extras_require={
        'test': [
            'hypothesis',
            'pytest',
        ],
        'dev': [
            # lint
            'flake8',
            'flake8-docstrings',
            'flake8-quotes',
            'pydocstyle<4.0',
            'pylint',
            # docs/, built by sphinx-build
            'sphinx',
            # scripts/release.sh
            'twine',
            'wheel',
        ],
    },
    entry_points={
        'console_scripts': ['tukey-fsbp=tukey_fsbp.cli:main'],
    },
)
