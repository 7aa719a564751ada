import os

from setuptools import Extension, setup

# The compiled kernel is an optional speedup; the package falls back to
# the pure-Python twin when the extension is absent.  ORTHOQL_PURE=1
# skips compilation entirely.
ext_modules = []
if os.environ.get("ORTHOQL_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("orthoql._kernel", ["src/orthoql/_kernel.pyx"])],
            language_level=3,
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
