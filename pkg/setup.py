# --- Imports

import os
from setuptools import setup, find_packages


# --- Package requirements

INSTALL_REQUIREMENTS = [
    'click',
    'networkx',
    'numpy',
    'pandas',
    ]

TESTING_REQUIREMENTS = [
    'coverage',
    'pycodestyle',
    'pylint',
    'psutil',
    'pytest',
    'pytest-cov',
    'pytest-pycodestyle',
    'pytest-pylint',
    'pytest-xdist',
    ]
DEV_REQUIREMENTS = TESTING_REQUIREMENTS + [
    'ipython',
    'radon',
    'sphinx',
    ]


# --- Package information

# Package root directory
pkg_root_dir = os.path.dirname(os.path.normcase(os.path.abspath(__file__)))

# Version
with open(os.path.join(pkg_root_dir, 'VERSION')) as version_file:
    version = version_file.read().strip()

# Authors and author email
with open(os.path.join(pkg_root_dir, 'AUTHORS')) as authors_file:
    author_lines = authors_file.readlines()
authors = ', '.join([line.split('<')[0].strip() for line in author_lines])
first_author_split = author_lines[0].split('<')
if len(first_author_split) > 1:
    author_email = first_author_split[1].split('>')[0].strip()
else:
    author_email = ''

# Long description
with open(os.path.join(pkg_root_dir, 'README.markdown')) as readme_file:
    long_description = readme_file.read()


# --- setup()

setup(
    # Package information
    name='PyGradSAT',
    version=version,
    license='Apache Software License',
    author=authors,
    author_email=author_email,
    description='SAT-based mining of frequent and closed gradual patterns',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='gradual patterns, data mining, SAT, AllSAT, CDCL',
    url='',

    # Package construction
    packages=find_packages(exclude=['examples', 'examples.*',
                                    'spikes', 'spikes.*']),
    python_requires='>=3.8',
    entry_points={
        'console_scripts': [
            'gradsat = gradsat.cli:run_main',
            'gradsat-allsat = gradsat.cli:run_allsat_main',
        ],
    },

    # Package requirements
    install_requires=INSTALL_REQUIREMENTS,
    tests_require=TESTING_REQUIREMENTS,
    extras_require={
        'dev': DEV_REQUIREMENTS,
        'testing': TESTING_REQUIREMENTS,
    }
)
