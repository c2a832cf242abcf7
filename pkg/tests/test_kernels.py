"""The two kernel lanes agree, and the pure lane works without Cython."""

import importlib.util
import sys
from pathlib import Path

import pytest

import wirtwidth._core as installed
from wirtwidth import diagram_from_text
from wirtwidth.gauss import diagram_arrays

CORE_SRC = Path(installed.__file__).parent / "_core.py"


def load_core_from_source(name, hide_cython=False):
    spec = importlib.util.spec_from_file_location(name, CORE_SRC)
    module = importlib.util.module_from_spec(spec)
    if hide_cython:
        saved = sys.modules.pop("cython", None)
        sys.modules["cython"] = None  # force ModuleNotFoundError on import
        try:
            sys.modules[name] = module
            spec.loader.exec_module(module)
        finally:
            del sys.modules["cython"]
            if saved is not None:
                sys.modules["cython"] = saved
    else:
        sys.modules[name] = module
        spec.loader.exec_module(module)
    return module


@pytest.fixture(scope="module")
def pure():
    return load_core_from_source("wirtwidth._core_srcpure")


def test_installed_lane_flag():
    assert installed.COMPILED == (not installed.__file__.endswith(".py"))


def test_pure_source_lane_runs(pure):
    assert pure.COMPILED is False


def test_shim_lane_runs_without_cython():
    module = load_core_from_source("wirtwidth._core_shim", hide_cython=True)
    assert module.COMPILED is False
    d = diagram_from_text("-1,2,-3,1,-2,3")
    kernel = module.make_kernel(diagram_arrays(d))
    assert module.oracle_enumerate(kernel)[:2] == (8, 2)


def test_lane_parity(pure, small_corpus):
    for name, code in small_corpus.items():
        d = diagram_from_text(code)
        if d.n_crossings == 0:
            continue
        arrays = diagram_arrays(d)
        ka, kb = installed.make_kernel(arrays), pure.make_kernel(arrays)
        assert installed.oracle_enumerate(ka) == pure.oracle_enumerate(kb), name
        ha = installed.heuristic_search(ka, d.n_strands, 10**6)
        hb = pure.heuristic_search(kb, d.n_strands, 10**6)
        assert ha == hb, name
        assert installed.exact_search(ka, 10**6, ha[0]) == pure.exact_search(
            kb, 10**6, hb[0]
        ), name
        assert installed.min_seed_subset(ka, d.n_strands) == pure.min_seed_subset(
            kb, d.n_strands
        ), name


def test_lane_parity_large(pure, large_sample_rows):
    for name, code in large_sample_rows[:12]:
        d = diagram_from_text(code)
        arrays = diagram_arrays(d)
        ka, kb = installed.make_kernel(arrays), pure.make_kernel(arrays)
        assert installed.heuristic_search(ka, 4, 5000) == pure.heuristic_search(
            kb, 4, 5000
        ), name
        assert installed.min_seed_subset(ka, 5) == pure.min_seed_subset(kb, 5), name


def test_kernel_rejects_oversize():
    with pytest.raises(ValueError):
        installed.DiagramKernel(0, *[None] * 7)
