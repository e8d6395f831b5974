from setuptools import setup

setup(
    name="ChromaticPipe",
    version="0.1.0",
    description="Bivariate chromatic polynomials of mixed graphs, computed three ways and checked against their identities",
    author="The ChromaticPipe developers",
    packages=["ChromaticPipe", "ChromaticPipe.core", "ChromaticPipe.plugins"],
    python_requires=">=3.8",
    install_requires=["networkx>=2.8", "sympy"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["chromaticpipe=ChromaticPipe.chromaticpipe:main"]},
)
