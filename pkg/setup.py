"""Build script for the optional compiled quadrature kernel.

The package works without the extension: weissbench._kernels falls back to a
NumPy implementation when the compiled module is missing, so any failure in
this file degrades performance, not correctness.
"""
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler or Cython
            warnings.warn(f"skipping compiled kernel ({exc}); "
                          "the NumPy fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name} ({exc}); "
                          "the NumPy fallback will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; building without compiled kernel")
        return []
    ext = Extension(
        "weissbench._kernels._powcos",
        sources=["src/weissbench/_kernels/_powcos.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
