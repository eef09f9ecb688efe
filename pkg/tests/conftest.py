import itertools
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from artifact import partition_core as pc

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def diagrams(draw, k=None, kmax=4):
    """A uniform-ish random set partition of the 2k vertices."""
    if k is None:
        k = draw(st.integers(1, kmax))
    verts = list(range(1, k + 1)) + [-i for i in range(1, k + 1)]
    labels = draw(st.lists(st.integers(0, 2 * k - 1), min_size=2 * k, max_size=2 * k))
    blocks = {}
    for v, lab in zip(verts, labels):
        blocks.setdefault(lab, []).append(v)
    return pc.Diagram(k, tuple(tuple(b) for b in blocks.values()))


def brute_set_partitions(items):
    """All set partitions by restricted growth strings (independent of the library)."""
    items = list(items)
    n = len(items)
    out = []
    for rgs in itertools.product(range(n), repeat=n):
        if n and rgs[0] != 0:
            continue
        if any(rgs[i] > max(rgs[:i], default=-1) + 1 for i in range(n)):
            continue
        blocks = {}
        for v, lab in zip(items, rgs):
            blocks.setdefault(lab, []).append(v)
        out.append(frozenset(frozenset(b) for b in blocks.values()))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.LINES:
        terminalreporter.write_line(line)
