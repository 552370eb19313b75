from functools import lru_cache

from hypothesis import strategies as st

from rookmatroid.shapes import all_skew_shapes


@lru_cache(maxsize=None)
def shapes_upto(n, connected=None):
    return tuple(all_skew_shapes(n, connected=connected))


def shape_strategy(n=8, connected=None):
    return st.sampled_from(shapes_upto(n, connected))


_criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, text = mark.args
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        _criteria[item.nodeid] = (label, text, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, text, ok in _criteria.values():
        terminalreporter.write_line(f"criterion {label:<3} {'PASS' if ok else 'FAIL'}  {text}")
