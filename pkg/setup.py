"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 1, 2026

@author: specpot team
"""
import re
from setuptools import setup, find_packages

#: Common requirements
install_requires = [
    'atom',
    'jsonpickle',
    'numpy',
    'scipy',
]

# Read version
with open('specpot/__init__.py') as f:
    m = re.search(r'version = ["\'](.+)["\']', f.read(), re.MULTILINE)
    assert m is not None, 'Failed to read version'
    version = m.group(1)


setup(
    name='specpot',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    version=version,
    author="specpot team",
    license='GPLv3',
    description="Rebuild potential functions from a given bound and "
                "continuous energy spectrum.",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    entry_points={
        'console_scripts': ['specpot = specpot.app:main'],
    },
    install_requires=install_requires,
    extras_require={
        'test': ['pytest', 'pytest-coverage'],
    },
)
