"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected at
import time), so a failed compile only costs speed. ``pip install -e .
--no-build-isolation`` builds it in place.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernels skipped ({exc}); "
                  f"pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  f"pure-Python fallback will be used")


extensions = [
    Extension(
        "zeroforcing._fastcore",
        ["src/zeroforcing/_fastcore.pyx"],
        extra_compile_args=["-O3"],
    )
]

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(extensions, language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
