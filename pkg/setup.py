"""Build the compiled R-length kernel when Cython and a C compiler are available.

Without them the package still installs and uses the pure-Python kernel.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("KNOTDELTA_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "knotdelta._rlength",
            ["src/knotdelta/_rlength.pyx"],
            extra_compile_args=["-O3"],
        )
        ext_modules = cythonize([ext], compiler_directives={"language_level": 3})

setup(ext_modules=ext_modules)
