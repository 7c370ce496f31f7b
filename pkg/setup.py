"""Build script: compiles the optional Cython kernels.

Without Cython the package installs as pure Python and ttmin.kernels
falls back to ttmin._kernels_py.
"""
from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    setup()
else:
    extensions = [Extension("ttmin._ckernels", ["src/ttmin/_ckernels.pyx"])]
    setup(
        ext_modules=cythonize(
            extensions,
            compiler_directives={"language_level": 3, "boundscheck": False,
                                 "wraparound": False, "cdivision": True},
        )
    )
