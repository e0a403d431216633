from minrpp.dynkin import DynkinDiagram, DynkinQuiver
from minrpp.heap import MinusculeHeap


def make_quiver(name, orient=None):
    return DynkinQuiver.from_orient(DynkinDiagram.parse(name), orient)


def make_heap(name, orient, m):
    return MinusculeHeap(make_quiver(name, orient), m)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(k))
