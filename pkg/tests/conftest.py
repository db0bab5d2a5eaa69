import pytest

from txml.mlp import MlpLayout, TrainConfig, fit_mlp
from txml.reference import FREQUENCY_TABLE, IMPEDANCE_TABLE
from txml.sweep import generate_sweep


def dense_sweep(table):
    return generate_sweep(table.kind, table.eps_r, table.fixed_params, 1.0, 9.5, 0.05)


def table_grid(table):
    return generate_sweep(table.kind, table.eps_r, table.fixed_params, table.x[0], table.x[-1], 0.5)


@pytest.fixture(scope="session")
def impedance_train():
    return dense_sweep(IMPEDANCE_TABLE)


@pytest.fixture(scope="session")
def frequency_train():
    return dense_sweep(FREQUENCY_TABLE)


@pytest.fixture(scope="session")
def impedance_grid():
    return table_grid(IMPEDANCE_TABLE)


@pytest.fixture(scope="session")
def frequency_grid():
    return table_grid(FREQUENCY_TABLE)


@pytest.fixture(scope="session")
def impedance_mlp(impedance_train):
    return fit_mlp(impedance_train, MlpLayout((8,)), TrainConfig(seed=42))


@pytest.fixture(scope="session")
def frequency_mlp(frequency_train):
    return fit_mlp(frequency_train, MlpLayout((8,)), TrainConfig(seed=42))


_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _criteria.setdefault((number, title), []).append(call.excinfo is None)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), results in sorted(_criteria.items()):
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number}: {title} ({sum(results)}/{len(results)} tests)")
