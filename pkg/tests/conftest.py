import pytest

from gkmring.builders import (build_coadjoint_orbit, build_complete_conics, build_fiber_system,
                              root_system)


def builder_instances():
    """Every builder instance used by the suite: name -> (system, betti mode)."""
    out = {
        "p1": (build_fiber_system("P1", (1,)), "full"),
        "ruled": (build_fiber_system("Ruled", (1,)), "full"),
        "pv": (build_fiber_system("PV", (1,)), "full"),
        "ruled-rank2": (build_fiber_system("Ruled", (1, -1)), "full"),
        "pv-rank2": (build_fiber_system("PV", (2, 1)), "full"),
        "A1": (build_coadjoint_orbit(root_system("A1"), (1,)), "full"),
        "A1xA1": (build_coadjoint_orbit(root_system("A1xA1"), (1, 1)), "full"),
        "A2-regular": (build_coadjoint_orbit(root_system("A2"), (1, 1)), "full"),
        "A2-wall": (build_coadjoint_orbit(root_system("A2"), (1, 0)), "full"),
        "B2-regular": (build_coadjoint_orbit(root_system("B2"), (1, 1)), "full"),
        "G2-regular": (build_coadjoint_orbit(root_system("G2"), (1, 1)), "full"),
        "conics": (build_complete_conics(), "weyl"),
    }
    return out


@pytest.fixture(scope="session")
def instances():
    return builder_instances()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
