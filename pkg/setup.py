"""Build script for the optional compiled determinant kernel.

The package is fully functional without a compiler: the extension is
skipped when Cython is missing and build failures are downgraded to a
warning, leaving the pure-Python kernel in charge.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: skipping compiled kernel ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping compiled kernel ({exc})", file=sys.stderr)


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "voltage_tower._kernel",
                ["src/voltage_tower/_kernel.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not found, building without the compiled kernel",
          file=sys.stderr)
    extensions = []

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": optional_build_ext},
)
