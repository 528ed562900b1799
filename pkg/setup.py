from setuptools import setup, find_packages


__version__ = "0.1.0"

with open("README.md", "r", encoding="UTF-8") as file:
    long_description = file.read()

requires_list = [
    "numpy>=1.24.0",
    "scipy>=1.10.0",
    "click>=8.1.0",
    "SQLAlchemy>=2.0.0"
]

tests_list = [
    "pytest>=7.0.0",
    "hypothesis>=6.0.0"
]

setup(
    name="fractconvex",
    version=__version__,
    description="Local fractional calculus on fractal sets, generalized convexity and inequality checks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT License",
    keywords=["Python", "fractional calculus", "local fractional derivative", "convexity", "inequalities"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    install_requires=requires_list,
    extras_require={"tests": tests_list},
    entry_points={"console_scripts": ["fractconvex = fractconvex.cli:cli"]}
)
