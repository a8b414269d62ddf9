# ----------------------------------------------------------------------------
#  File:        setup.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Setup script for the SeqBlocks package
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from setuptools import setup, find_packages

TEST_PACKAGES = ("pytest", "hypothesis")

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as f:
    requirements = []
    test_requirements = []
    for line in f:
        line = line.strip()
        if line and not line.startswith("#"):
            # Test tooling goes to the "test" extra
            if line.split("==")[0] in TEST_PACKAGES:
                test_requirements.append(line)
            else:
                requirements.append(line)

setup(
    name="seqblocks",
    version="1.0.0",
    author="Christopher Celaya",
    author_email="chris@celayasolutions.com",
    description="Limit-profile blocks of real sequences, transfer maps and Hadamard connectors",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/while-basic/seqblocks",
    packages=find_packages(exclude=["examples", "examples.*"]),
    include_package_data=True,
    package_data={
        "seqblocks": ["config/*.yaml", "blocks/*.json", "schemas/*.json"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={
        "test": test_requirements,
    },
    entry_points={
        "console_scripts": [
            "seqblocks=seqblocks.main:main",
        ],
    },
)
