import importlib

import pytest

import fractconvex


def test_every_exported_name_resolves():
    assert fractconvex.__version__

    for name in fractconvex.__all__:
        assert hasattr(fractconvex, name), name


@pytest.mark.parametrize("module", [
    "fractconvex.expr",
    "fractconvex.expr.simplifier",
    "fractconvex.calculus",
    "fractconvex.checkers",
    "fractconvex.utils",
    "fractconvex.database",
    "fractconvex.cli"
])
def test_subpackages_import(module):
    importlib.import_module(module)


def test_simplify_is_the_function():
    assert callable(fractconvex.simplify)
    assert callable(fractconvex.expr.simplify)
