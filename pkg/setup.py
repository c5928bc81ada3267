"""Build script: compiles the optional grid-scan kernel.

The package works without the extension (a numpy fallback is selected at
import time), so any failure here degrades to a pure-Python install instead
of aborting.  Set VIVIANI_PURE_PYTHON=1 to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that warns and continues when no compiler is usable."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # CompileError, DistutilsPlatformError, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: building the compiled kernel failed ({exc}); "
              "falling back to the pure-Python implementation")


def extensions():
    if os.environ.get("VIVIANI_PURE_PYTHON"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        optional_build_ext._warn("Cython not installed")
        return []
    return cythonize(
        [
            Extension(
                "viviani._gridmin",
                ["src/viviani/_gridmin.pyx"],
                extra_compile_args=["-O3", "-fno-math-errno"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
