from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ecdual._peel_core",
                ["src/ecdual/_peel_core.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback kernel is selected at import time, so the
    # package still works without Cython.
    ext_modules = []

setup(ext_modules=ext_modules)
