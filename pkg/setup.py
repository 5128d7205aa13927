"""Build script: compiles the optional Cython kernel extension when possible.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any failure here downgrades to a pure-Python
build instead of aborting the install.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        ["src/gaindoublet/_kernels_cy.pyx"],
        compiler_directives={"language_level": "3"},
        include_path=[numpy.get_include()],
    ), [numpy.get_include()]


class optional_build_ext(build_ext):
    """build_ext that warns and continues when no compiler is available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, header missing, ...
            print(f"warning: skipping C extension build ({exc}); "
                  "using the NumPy kernel fallback", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "using the NumPy kernel fallback", file=sys.stderr)


ext = _extensions()
if ext:
    modules, include_dirs = ext
    setup(ext_modules=modules, include_dirs=include_dirs,
          cmdclass={"build_ext": optional_build_ext})
else:
    setup()
