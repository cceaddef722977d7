import os
from setuptools import find_packages, setup

with open(os.path.join(os.path.dirname(__file__), 'README.rst')) as readme:
    README = readme.read()

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

setup(
    name='django-curvegen',
    version='1.0',
    packages=find_packages(exclude=['demo']),
    include_package_data=True,
    license='MIT License',
    description='Django app deciding which objects of the derived category of a curve are classical generators.',
    long_description=README,
    install_requires=[
        'django>=3.2',
        'lark>=1.1',
    ],
    extras_require={
        'test': ['hypothesis>=6.0'],
        'docs': ['sphinx'],
    },
    entry_points={
        'console_scripts': ['curvegen = curvegen.cli:main'],
    },
    classifiers=[
        'Environment :: Console',
        'Framework :: Django',
        'Framework :: Django :: 3.2',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
