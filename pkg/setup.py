"""Build script: compiles the optional numeric extension.

The package works without the extension (a NumPy fallback is selected at
import time), so a missing compiler or Cython must not fail the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    extension = Extension(
        "mvdrisk._kernels",
        ["src/mvdrisk/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    extension.optional = True
    ext_modules = cythonize(
        [extension],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
