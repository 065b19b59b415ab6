from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/latticedual/_kernels/speed.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The package falls back to the pure-Python kernels at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
