#!python
# coding: utf-8

"""
alexgeo setup configuration.
"""

import re
from setuptools import setup


# package metadata is read without importing alexgeo (numpy may not be installed yet)
with open("alexgeo/__init__.py", encoding="utf-8") as init:
    METADATA = dict(re.findall(r'^__(\w+)__ = "([^"]*)"', init.read(), re.MULTILINE))

with open("README.md", encoding="utf-8") as readme, open(
    "docs/history.md", encoding="utf-8"
) as history:
    DESCRIPTION = readme.read() + "\n#" + history.read()
DESCRIPTION_SHORT = "Numerical checks of comparison geometry, barycenters and Jensen inequalities on model spaces."

setup(
    name="alexgeo",
    version=METADATA["version"],
    description=DESCRIPTION_SHORT,
    long_description=DESCRIPTION,
    long_description_content_type="text/markdown",
    license=METADATA["license"],
    author=METADATA["author"],
    packages=["alexgeo"],
    package_dir={"alexgeo": "alexgeo"},
    python_requires=">=3.8",
    install_requires=["numpy>=1.21", "scipy>=1.7"],
    entry_points={"console_scripts": ["alexgeo=alexgeo.cli:main"]},
    keywords="alexandrov-space curvature barycenter karcher-mean jensen-inequality geodesic",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    test_suite="tests",
    tests_require=["pytest", "hypothesis"],
)
