"""Build script: compiles the optional Cython fast path.

The package works without the extension (a pure-numpy implementation is
selected at import time), so a missing compiler or Cython only costs speed.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QUADSPLINE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "quadspline._speedups",
                    ["src/quadspline/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
