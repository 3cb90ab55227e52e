import json
from importlib import resources

import pytest


@pytest.fixture(scope="session")
def paper_tables():
    """Published admissibility tables, transcribed verbatim, with errata."""
    text = resources.files("affine_hopf").joinpath("data/paper_tables.json").read_text()
    return json.loads(text)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[0][2:])):
            terminalreporter.write_line(line)
