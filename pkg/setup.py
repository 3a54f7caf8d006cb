import sys

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package falls back to the
# pure-Python kernels at import when the extension is missing.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("fibpaths._kernels", ["src/fibpaths/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not found, skipping compiled kernels", file=sys.stderr)
    extensions = []

setup(ext_modules=extensions)
