import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-longrun",
        action="store_true",
        default=False,
        help="run the full-scale (hours) computations",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-longrun") or os.environ.get("TRINODISC_LONGRUN"):
        return
    skip = pytest.mark.skip(reason="long-running; pass --run-longrun to enable")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
