import time

import pytest

from leavitt import (
    AlgebraContext,
    Cardinal,
    OrdinalSpec,
    PrimeField,
    build_catalog_graph,
    finite_subsets_family,
    line,
    loop,
    ordinal_complete_family,
    rose,
    two_arrow,
)

# the eleven finite presentations exercised throughout the suite
CATALOG_NAMES = (
    "R_1",
    "R_2",
    "R_3",
    "A_2",
    "A_3",
    "A_5",
    "TwoArrow",
    "FS_2",
    "FS_3",
    "OC_3",
    "OC_4",
)


def _build_catalog():
    return {
        "R_1": build_catalog_graph(loop()),
        "R_2": build_catalog_graph(rose(2)),
        "R_3": build_catalog_graph(rose(3)),
        "A_2": build_catalog_graph(line(2)),
        "A_3": build_catalog_graph(line(3)),
        "A_5": build_catalog_graph(line(5)),
        "TwoArrow": build_catalog_graph(two_arrow()),
        "FS_2": build_catalog_graph(finite_subsets_family(Cardinal.finite(2))),
        "FS_3": build_catalog_graph(finite_subsets_family(Cardinal.finite(3))),
        "OC_3": build_catalog_graph(
            ordinal_complete_family(OrdinalSpec(Cardinal.finite(3)))
        ),
        "OC_4": build_catalog_graph(
            ordinal_complete_family(OrdinalSpec(Cardinal.finite(4)))
        ),
    }


@pytest.fixture(scope="session")
def catalog():
    return _build_catalog()


@pytest.fixture(scope="session")
def catalog_contexts(catalog):
    return {name: AlgebraContext(g) for name, g in catalog.items()}


@pytest.fixture(scope="session")
def f5():
    return PrimeField(5)


def pytest_configure(config):
    config._suite_t0 = time.monotonic()


def pytest_collection_modifyitems(config, items):
    # the acceptance module asserts on whole-suite timing, so it runs last
    items.sort(key=lambda it: it.fspath.basename == "test_acceptance.py")
