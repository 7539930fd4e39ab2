"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-numpy
backend is selected at import time when qdpump._core is missing), so any
failure here degrades to a pure-Python install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "qdpump._core",
                ["src/qdpump/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    import sys

    print(f"qdpump: skipping Cython extension ({exc}); "
          "falling back to the pure-Python kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
