"""Build script.  The compiled kernel module is optional: if Cython (or a C
compiler) is unavailable the package installs anyway and falls back to the
pure-Python kernels at import time."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/wreathgroth/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"wreathgroth: skipping compiled kernels ({exc})")

setup(ext_modules=ext_modules)
