"""Build the optional compiled elimination kernel.

The package works without it; ``negcurve.linalg`` falls back to the pure
Python kernel when the extension is missing.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:  # build without the extension
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "negcurve.linalg._modp_core",
                sources=["src/negcurve/linalg/_modp_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )

setup(ext_modules=ext_modules)
