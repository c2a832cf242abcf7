"""Build hook: compiles the search kernels when Cython is available.

``wirtwidth/_core.py`` is written in Cython pure-Python mode.  When Cython
and a C compiler are present the module is compiled to an extension that
shadows the source file; otherwise the package installs pure-Python and
the same file runs as the fallback.  Set WIRTWIDTH_PURE=1 to skip the
extension on purpose.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("WIRTWIDTH_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("wirtwidth._core", ["src/wirtwidth/_core.py"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "nonecheck": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
