"""Build script: compiles the optional Cython kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so the extension is marked optional.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "smoothwords.kernels._ck",
                ["src/smoothwords/kernels/_ck.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
