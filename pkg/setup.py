"""Build script: compiles the column-search kernel when Cython is available.

The package works without the extension (a pure-Python fallback with the same
algorithm is selected at import time), so any build failure here downgrades to
a warning instead of aborting the install.
"""

from __future__ import annotations

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/deltacodes/_minweight.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"warning: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
