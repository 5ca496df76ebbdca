"""Build hook for the optional compiled kernel.

The package is pure Python plus one optional Cython extension holding the
hot loops (randomized witness trials, integer elementary-symmetric DP).
If Cython or a C compiler is missing the build silently degrades to the
pure-Python fallback selected at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing: fall back to pure Python
            print(f"warning: compiled kernel skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled kernel {ext.name} skipped ({exc})")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "signorder._native",
                ["src/signorder/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
