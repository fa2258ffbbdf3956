from setuptools import setup, find_packages

setup(
    name="chebdyn",
    version="1.0.0",
    description="Minimal decompositions of 2-adic polynomial dynamics, with Chebyshev polynomials as the worked case",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=[],
    extras_require={
        "fast": ["gmpy2"]
    },
    entry_points={
        "console_scripts": ["chebdyn = chebdyn.cli.main:main"]
    },
    include_package_data=True,
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
    ],
)
