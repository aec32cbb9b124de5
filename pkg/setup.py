"""Build script: compiles the enumeration kernel extension when Cython is available.

The package works without the extension (a pure-Python twin of the kernel is
selected at import time), so the build is marked optional and a failed compile
degrades gracefully instead of breaking the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "ortholat._enumcy",
                ["src/ortholat/_enumcy.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
