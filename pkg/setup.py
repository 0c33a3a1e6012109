"""Build hook for the optional compiled term kernels.

The package runs pure Python out of the box; when Cython and a C compiler
are available the hot kernels are compiled, and qfib._backend picks the
compiled module up at import time.  The extension is marked optional so a
failed build degrades to the pure implementation instead of aborting the
install.

To rebuild in place: python setup.py build_ext --inplace
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
                "qfib._kernels_cy",
                ["src/qfib/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
