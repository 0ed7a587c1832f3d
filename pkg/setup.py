"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); building it makes the filters fast
enough for full-size benchmark sweeps.  Set SAPDENOISE_PURE=1 to skip the
extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SAPDENOISE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sapdenoise._kernels", ["src/sapdenoise/_kernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
