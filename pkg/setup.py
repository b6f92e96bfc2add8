"""Build script for the optional compiled GF(2) elimination kernel.

The package is fully functional without the extension; lightsout._gf2kernel
falls back to the pure-Python implementation when the compiled module is
missing (no Cython, no C compiler, or a failed build).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "lightsout._gf2fast",
                ["src/lightsout/_gf2fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
