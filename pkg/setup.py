"""Build script: compiles the optional numeric kernel extension.

The package is pure Python plus one Cython module (tlfiber._kernels._core)
mirroring tlfiber._kernels._pure. The extension is marked optional so the
install still succeeds on boxes without a C toolchain; the kernel selector
falls back to the pure backend at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "tlfiber._kernels._core",
                ["src/tlfiber/_kernels/_core.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    extensions = []

setup(ext_modules=extensions)
