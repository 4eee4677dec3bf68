"""Build script: compiles the optional enumeration kernel.

The package is pure Python except for cyclotwist._enumspeed, a Cython
translation of cyclotwist._enum_py used by the brute-force oracle.  If
Cython (or a C compiler) is unavailable the extension is skipped and the
pure kernel is selected at import time, so installation never fails on
that account.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("cyclotwist._enumspeed", ["src/cyclotwist/_enumspeed.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
