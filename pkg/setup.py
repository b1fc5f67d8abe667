from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install; the package falls back to the interpreted kernels.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "rumin_sphere._kernels_cy",
                ["src/rumin_sphere/_kernels_cy.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
