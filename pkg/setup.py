"""Build script: compiles the optional stability kernel.

The compiled extension is a pure speedup; if Cython or a C compiler is
unavailable the build still succeeds and the package falls back to the
pure-Python kernel at import time.
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
                "quiverstab._stabcore",
                ["src/quiverstab/_stabcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
