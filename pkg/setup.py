"""Build hook for the optional compiled kernel.

The package is fully functional without the extension: cbsums.kernels falls
back to the pure-Python implementation at import time.  Set CBSUMS_PURE=1 to
skip the build explicitly (e.g. for benchmarking the fallback).
"""

import os

from setuptools import Extension, setup

extensions = []
if os.environ.get("CBSUMS_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        extensions = cythonize(
            [Extension("cbsums.kernels._ckern", ["src/cbsums/kernels/_ckern.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=extensions)
