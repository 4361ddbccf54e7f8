import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run exhaustive order-6 sweeps and order-16 enumerations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
