"""Build script for the optional compiled kernel.

The package is pure Python except for ncfkit._kernels.fastcore, a Cython
translation of the oracle inner loops.  If Cython or a C compiler is
missing the extension is skipped and the pure backend is used at runtime.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "ncfkit._kernels.fastcore",
        ["src/ncfkit/_kernels/fastcore.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize(
        [ext],
        language_level="3",
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
