"""Build hook for the optional compiled enumeration kernel.

If Cython or a C compiler is unavailable the package still installs and the
pure-Python kernel is used.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("asmgen._ckernel", ["src/asmgen/_ckernel.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
