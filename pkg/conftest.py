"""Conftest file. Modifying test running activities."""


def pytest_collection_modifyitems(items, config):
    """Remove the abstract report test case from the run."""
    deselected = []
    for item in items:
        if item.cls is not None and item.cls.__name__ == 'BaseReportTestCase':
            deselected.append(item)
    config.hook.pytest_deselected(items=deselected)
    items[:] = [item for item in items if item not in deselected]
