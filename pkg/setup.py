from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fraclap._kernels._csr_cy",
                ["src/fraclap/_kernels/_csr_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # No Cython: install pure Python, the numpy fallback kernels take over.
    ext_modules = []

setup(ext_modules=ext_modules)
