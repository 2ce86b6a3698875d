from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "lagood._core",
    sources=[
        "bindings/module.cpp",
        "src/multi_index.cpp",
        "src/series.cpp",
        "src/inversion.cpp",
        "src/analytic.cpp",
        "src/parse.cpp",
        "src/format.cpp",
    ],
    include_dirs=["include"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
