import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize

    USE_CYTHON = True
except ImportError:
    USE_CYTHON = False


class OptionalBuildExt(build_ext):
    """Leave the pure-Python fallback in charge when no compiler is available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernels not built ({exc}); using fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: failed to build {ext.name} ({exc}); using fallback")


ext_path = "src/wzsombor/_kernels" + (".pyx" if USE_CYTHON else ".c")
extensions = []
if os.environ.get("WZSOMBOR_NO_EXT") != "1" and os.path.exists(ext_path):
    extensions = [Extension("wzsombor._kernels", [ext_path], extra_compile_args=["-O3"])]
    if USE_CYTHON:
        extensions = cythonize(extensions, language_level=3)

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
