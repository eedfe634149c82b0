from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [Extension("fuzzedge._kernels", ["src/fuzzedge/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
else:
    # No Cython at build time: install the pure-Python package only.
    # fuzzedge.backends falls back to the Python kernels at import.
    extensions = []

setup(ext_modules=extensions)
