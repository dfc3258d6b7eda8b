from setuptools import setup, find_packages

__version__ = "0.1.0"

setup(
    name="WeightedKStab",
    version=__version__,
    description="Exact weighted K-polystability checks for rank two spherical Fano varieties",
    author="WeightedKStab developers",
    author_email="",
    license="MIT",
    classifiers=[
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "License :: OSI Approved :: MIT License",
    ],
    keywords="k-stability fano spherical moment polytope duistermaat-heckman weighted",
    packages=find_packages(exclude=["tests", "tests.*"]),
    zip_safe=False,
    platforms="any",
    python_requires=">=3.7",
    install_requires=[
        "marshmallow>=3.2.1,<4",
        "click>=7.0",
        "numpy>=1.17",
        "mpmath>=1.1",
    ],
    setup_requires=["pytest-runner"],
    tests_require=["pytest", "sympy"],
    extras_require={"tests": ["pytest", "sympy"], "docs": "sphinx"},
    entry_points={"console_scripts": ["wkstab=weightedkstab.cli:cli"]},
)
