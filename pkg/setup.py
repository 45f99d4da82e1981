from setuptools import setup, find_packages

readme = open('README.rst').read()


install_requires=[
    'jsonschema',
    'matplotlib',
    'numpy',
    'pyyaml>=5.1',
    'scipy>=1.12'
]


tests_require = [
    'coverage>=4.0',
    'pytest',
    'pytest-cov',
    'tox'
]


extras_require = {
    'docs': [
        'Sphinx',
        'sphinx-rtd-theme'
    ],
    'tests': tests_require,
}


setup(
    name='singular-drift-lab',
    version='0.1.0',
    description='Numerical Laboratory for Elliptic Equations with Singular Drift',
    long_description=readme,
    long_description_content_type='text/x-rst',
    keywords='elliptic equations singular drift finite differences',
    license='MIT',
    packages=find_packages(exclude=('tests',)),
    include_package_data=True,
    python_requires='>=3.9',
    extras_require=extras_require,
    tests_require=tests_require,
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'sdlab = sdlab.cli:main'
        ]
    },
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics'
    ]
)
