"""Build script for the compiled stencil kernels.

The extension is optional at runtime: toyns falls back to the pure numpy
kernels in toyns._kernels.python_ref when the compiled module is missing.
Floating-point contraction is disabled so both backends produce bitwise
identical results.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "toyns._kernels._core",
                ["src/toyns/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
