import glob
import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

HERE = os.path.abspath(os.path.dirname(__file__))


def generate_manifest_source() -> str:
    """Produce the embedded-manifest translation unit the CMake build derives
    from share/phi_manifest.wm, so both builds carry identical data."""
    with open(os.path.join(HERE, "share", "phi_manifest.wm"), encoding="utf-8") as f:
        text = f.read()
    with open(os.path.join(HERE, "src", "manifest_data.cpp.in"), encoding="utf-8") as f:
        template = f.read()
    out_dir = os.path.join(HERE, "build", "py_generated")
    os.makedirs(out_dir, exist_ok=True)
    out = os.path.join(out_dir, "manifest_data.cpp")
    rendered = template.replace("@WMINUS_MANIFEST_TEXT@", text)
    if not os.path.exists(out) or open(out, encoding="utf-8").read() != rendered:
        with open(out, "w", encoding="utf-8") as f:
            f.write(rendered)
    return "build/py_generated/manifest_data.cpp"


# setup() requires /-separated paths relative to this directory.
sources = sorted(glob.glob("src/*.cpp"))
sources.append("bindings/module.cpp")
sources.append(generate_manifest_source())

setup(
    ext_modules=[
        Pybind11Extension(
            "wminus._core",
            sources,
            include_dirs=["include"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
