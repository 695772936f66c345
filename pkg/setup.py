"""Build hook for the optional compiled search core.

The package is fully functional without the extension (a pure-Python
implementation of every kernel ships alongside it); compiling just makes
the exponential searches roughly an order of magnitude faster, which the
larger sweeps rely on.  If Cython is unavailable the build degrades to a
pure-Python install instead of failing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "grundytd._kernels_c",
                ["src/grundytd/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
