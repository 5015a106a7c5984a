from setuptools import setup

# The compiled term-map kernels are an optional speedup.  When Cython is
# unavailable the package installs without the extension and gvand.kernels
# falls back to the pure-Python twin at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/gvand/_termops.pyx"], language_level="3")
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
