import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FORGE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fraisseforge._kernel.plcore_c",
                    ["src/fraisseforge/_kernel/plcore_c.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        # Pure-Python fallback is selected at import time; the package
        # works without the compiled kernel.
        ext_modules = []

setup(ext_modules=ext_modules)
