#!/usr/bin/env python

import ast
import os
import sys


class MetadataFinder(ast.NodeVisitor):
    def __init__(self):
        self.version = None
        self.summary = None
        self.author = None
        self.email = None
        self.uri = None
        self.license = None

    def visit_Assign(self, node):
        if not isinstance(node.targets[0], ast.Name) or not isinstance(node.value, ast.Constant):
            return
        if node.targets[0].id == '__version__':
            self.version = node.value.value
        elif node.targets[0].id == '__summary__':
            self.summary = node.value.value
        elif node.targets[0].id == '__author__':
            self.author = node.value.value
        elif node.targets[0].id == '__email__':
            self.email = node.value.value
        elif node.targets[0].id == '__uri__':
            self.uri = node.value.value
        elif node.targets[0].id == '__license__':
            self.license = node.value.value


with open(os.path.join('djpolar', '__init__.py')) as open_file:
    finder = MetadataFinder()
    finder.visit(ast.parse(open_file.read()))

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

if sys.argv[-1] == 'publish':
    os.system('python setup.py sdist upload')
    os.system('python setup.py bdist_wheel upload')
    sys.exit()

if sys.argv[-1] == 'tag':
    print("Tagging the version on github:")
    os.system("git tag -a %s -m 'version %s'" % (finder.version,
                                                 finder.version))
    os.system("git push --tags")
    sys.exit()

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')

INSTALL_REQUIRES = [
    'Django>=3.2',
    'django-model-utils>=4.0',
    'jsonfield>=3.1',
    'sympy>=1.9',
    'pyparsing>=3.0',
    'numpy>=1.21',
]

setup(
    name='dj-polar',
    version=finder.version,
    description=finder.summary,
    long_description=readme + '\n\n' + history,
    author=finder.author,
    author_email=finder.email,
    url=finder.uri,
    packages=[
        'djpolar',
        'djpolar.management',
        'djpolar.management.commands',
        'djpolar.migrations',
        'djpolar.templatetags',
    ],
    package_dir={'djpolar': 'djpolar'},
    include_package_data=True,
    install_requires=INSTALL_REQUIRES,
    entry_points={
        'console_scripts': [
            'djpolar = djpolar.cli:main',
        ],
    },
    license=finder.license,
    zip_safe=False,
    keywords='polar varieties real algebraic curves django',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Framework :: Django',
        'Framework :: Django :: 3.2',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
