# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.


import os
import setuptools


DIR_PATH = os.path.dirname(os.path.abspath(__file__))
__version__ = '0.1.0'

with open(os.path.join(DIR_PATH, 'requirements.txt'),
          'r', encoding='utf-8') as f:
    requirements = [line.strip() for line in f if line.strip()]


def setup_package():

    setuptools.setup(
        name='decosim',
        version=__version__,
        author='decosim contributors',
        description='decosim: decoherence of a qubit coupled to an environment '
                    'crossing a quantum phase transition.',
        packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
        include_package_data=True,
        classifiers=[
            'Programming Language :: Python :: 3.8',
            'License :: OSI Approved :: MIT License',
            'Topic :: Scientific/Engineering :: Physics',
        ],
        python_requires='>=3.8',
        install_requires=requirements,
        extras_require={'test': ['pytest']},
        entry_points={
            'console_scripts': ['decosim = decosim.cli:main'],
        },
        zip_safe=False,
    )


if __name__ == '__main__':
    setup_package()
