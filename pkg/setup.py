# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

from setuptools import setup, find_packages

setup(name='gammaforge',
      version='0.1.0',
      install_requires=['numpy', 'scipy', 'pandas', 'scikit-learn'],
      extras_require={'jit': ['numba']},
      description='Enumeration and classification of finite commutative '
                  'ternary Gamma-semirings',
      url='',
      author='FNUSA-ICRC, BME',
      author_email='',
      license='BSD 3.0',
      packages=find_packages(exclude=['examples', 'examples.*']),
      keywords='ternary semiring enumeration isomorphism invariants',
      classifiers=[
          'Development Status :: 2 - Pre-Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: BSD License',
          'Programming Language :: Python :: 3',
          'Operating System :: OS Independent',
          'Topic :: Scientific/Engineering :: Mathematics'],
      entry_points={
          'console_scripts': [
              'gamma-forge=gammaforge.cli.commands:main']},
      setup_requires=['pytest_runner'],
      tests_require=['pytest', 'pytest-benchmark'],
      zip_safe=False)
