# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
from setuptools import setup, find_packages


with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name='poskit',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    version='0.1.0',
    license='CC BY-NC-SA 4.0',
    description='Exact positivity checks and Seshadri constants for bundles on simple G-varieties and toric varieties.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    author='The Poskit Authors',
    keywords=['algebraic geometry', 'seshadri constant', 'nef cone', 'toric variety', 'flag variety'],
    python_requires='>=3.9',
    install_requires=['pydesign', 'sympy', 'pycddlib>=2.1,<3'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['poskit = poskit.cli.main:main']},
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: Free for non-commercial use',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
)
