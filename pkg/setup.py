"""
Setup script for molkit, exact computation in modular ortholattices.
"""

from setuptools import setup, find_packages

setup(
    name="molkit",
    version="0.3.0",
    description="Exact-arithmetic workbench for modular ortholattices",
    author="molkit developers",
    packages=find_packages(exclude=["test", "test.*"]),
    include_package_data=True,
    install_requires=[
        "numpy",
        "networkx",
        "tabulate",
        "pyyaml",
        "python-dotenv",
    ],
    entry_points={
        "console_scripts": [
            "molkit=cli.molkit_cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
