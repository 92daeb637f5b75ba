"""Build shim for the optional compiled matrix kernels.

The package is fully functional without the extension; if Cython (or a C
compiler) is unavailable the install proceeds with the pure-Python kernels.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hybridnc._kernels", ["src/hybridnc/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available, building without compiled kernels")

setup(ext_modules=ext_modules)
