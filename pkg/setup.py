from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the compiled core; the pure-Python
    # kernels are selected at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "inner_entropy._core",
                ["src/inner_entropy/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
