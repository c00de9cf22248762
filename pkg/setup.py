"""Build script for the optional compiled kernels.

``pip install -e . --no-build-isolation`` compiles ``multiarr._ckernels``.
If Cython or a C compiler is missing the package still installs and runs on
the pure-Python kernels.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("MULTIARR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "multiarr._ckernels",
                    ["src/multiarr/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
