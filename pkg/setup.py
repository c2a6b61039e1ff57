"""Build script: compiles the optional Cython reduction kernels.

The package is fully functional without the extension (a pure-Python
twin of every kernel ships in cupfloer._kernels_py); the extension is
only a speedup, so a failed compile must not fail the install.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: building cupfloer._kernels failed ({exc}); "
                  "falling back to the pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} failed to compile ({exc}); "
                  "falling back to the pure-Python kernels")


ext_modules = []
if os.environ.get("CUPFLOER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            ["src/cupfloer/_kernels.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
