"""Build hook for the optional compiled kernels.

The package is pure Python by default; the Cython extension accelerates the
brute-force realizability search and census kernels. Without Cython the
install simply skips the extension and the pure-Python kernels are used.
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
                "distfreq._speedups",
                ["src/distfreq/_speedups.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
