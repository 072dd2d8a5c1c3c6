"""Build script for the optional compiled enumeration kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), but the compiled kernel is roughly
two orders of magnitude faster on the brute-force counts.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "gpavoid._ckernel",
        ["src/gpavoid/_ckernel.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions, compiler_directives={"language_level": "3"}
    )
    if cythonize is not None
    else [],
)
