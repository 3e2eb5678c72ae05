"""Build hook for the optional compiled kernel extension.

The package is pure Python plus one Cython module with the hot
frequency-weight loops.  If Cython is unavailable the extension is simply
skipped and the numpy fallback in ``soboltrace.kernels`` is used at import
time, so a source install never hard-fails on the compiler.
"""

import os

import numpy as np
from setuptools import Extension, setup

_PYX = os.path.join("src", "soboltrace", "kernels", "_ckernels.pyx")

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(_PYX):
    ext_modules = cythonize(
        [
            Extension(
                "soboltrace.kernels._ckernels",
                [_PYX],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
