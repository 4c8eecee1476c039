"""Builds the optional compiled row-reduction kernel.

The package is fully functional without the extension (a pure-Python
twin of the kernel is selected at import time); set INVFORMS_NO_EXT=1
to skip compilation.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("INVFORMS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/invforms/_echelon_c.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
