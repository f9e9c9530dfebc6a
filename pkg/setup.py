from setuptools import Extension, setup

from Cython.Build import cythonize

extensions = [
    Extension(
        "crossbifix._scan",
        ["src/crossbifix/_scan.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
