import os

from setuptools import Extension, setup

# The compiled kernels are an optimization, not a requirement: the package
# falls back to src/lefschetz/_kernels/_pure.py when the extension is absent.
ext_modules = []
pyx = os.path.join("src", "lefschetz", "_kernels", "_core.pyx")
if os.path.exists(pyx):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lefschetz._kernels._core", [pyx])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
