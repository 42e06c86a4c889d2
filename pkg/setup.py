from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python fallback is used at runtime
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("polyzeta._kernels", ["src/polyzeta/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
