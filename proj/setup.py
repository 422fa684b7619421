"""Build script for the toddzeta._core extension module.

The C++ core is compiled directly into the extension (no separate shared
library), so the only link-time dependencies are GMP and its C++ wrapper.
"""

import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "toddzeta._core",
    sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
