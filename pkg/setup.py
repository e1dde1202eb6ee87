import os

from setuptools import setup

ext_modules = []
if os.environ.get("SIMPLESTFIELDS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "simplestfields._kernels._ckernels",
                    ["src/simplestfields/_kernels/_ckernels.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: the pure-Python kernels are used instead.
        ext_modules = []

setup(ext_modules=ext_modules)
