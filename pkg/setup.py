import setuptools

with open("README.rst", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="BalInv",
    version="0.1.0",
    author="BalInv authors",
    description="Structured approximate inverses of balanced symmetric "
                "matrices, with error bounds, PCG and beta-model fitting.",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    packages=setuptools.find_packages(exclude=["tests"]),
    scripts=["scripts/balinv_bench.py"],
    python_requires=">=3.8",
    install_requires=[
        "numpy >= 1.17",
        "scipy >= 1.4",
    ],
    extras_require={
        "test": ["hypothesis >= 5.0"],
    },
    classifiers=[
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
