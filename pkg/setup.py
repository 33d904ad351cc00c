"""Build script: compiles the optional Cython solver kernel.

The package works without the extension (a pure-Python kernel is used as a
fallback), so any failure here downgrades to a pure-Python install instead
of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "mbrg._kernel",
                ["src/mbrg/_kernel.pyx"],
                language="c++",
                extra_compile_args=["-O2", "-std=c++17"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"warning: Cython kernel not built ({exc}); using pure-Python fallback")

setup(ext_modules=ext_modules)
