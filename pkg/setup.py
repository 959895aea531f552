"""Build script for the optional compiled scan kernels.

``pip install .`` compiles ``mstdlab._kernels._fastcore`` when Cython and a
C compiler are available. The extension is marked optional: without a
compiler the install still succeeds and the package selects the pure-Python
kernels at import time (see ``mstdlab._kernels``).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "mstdlab._kernels._fastcore",
                sources=["src/mstdlab/_kernels/_fastcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
