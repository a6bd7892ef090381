from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # fall back to the pure-Python sweep
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("latticecount._sweep_ext", ["src/latticecount/_sweep_ext.pyx"],
                   extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
