#!/usr/bin/env python3
"""
Setup.py for pm4cover, reading its metadata from pyproject.toml.
"""
from setuptools import setup, find_packages

import tomli

if __name__ == "__main__":
    with open("pyproject.toml", "rb") as f:
        toml_data = tomli.load(f)

    setup(
        name="pm4cover",
        version=toml_data['project']['version'],
        packages=find_packages(exclude=["tests_pm4cover", "examples", "examples.*"]),
        python_requires=">=3.10",
        entry_points={
            'console_scripts': [
                'pm4cover = pm4cover:main',
            ]
        },
    )
