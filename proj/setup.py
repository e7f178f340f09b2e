"""CMake-driving build for the epl._core extension.

The C++ library, bindings, and tests all live in one CMake tree; this shim
lets `pip install --no-build-isolation .` (or `-e .`) reuse it instead of
re-describing the sources to setuptools.
"""

import os
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.path.abspath(sourcedir)


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = os.path.abspath(os.path.dirname(self.get_ext_fullpath(ext.name)))
        build_temp = os.path.join(self.build_temp, ext.name)
        os.makedirs(build_temp, exist_ok=True)
        configure = [
            "cmake",
            ext.sourcedir,
            f"-DEPL_PYTHON_OUTPUT_DIR={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DEPL_BUILD_CLI=OFF",
            "-DEPL_BUILD_TESTS=OFF",
        ]
        subprocess.run(configure, cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel"],
            cwd=build_temp,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("epl._core")],
    cmdclass={"build_ext": CMakeBuild},
)
