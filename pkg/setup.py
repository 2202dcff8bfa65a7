from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    # optional=True: a failed compile falls back to the pure-Python sieve
    # selected at import time, it does not break the install.
    extensions = cythonize(
        [Extension("lcmbounds._sieve_c", ["src/lcmbounds/_sieve_c.pyx"], optional=True)],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
