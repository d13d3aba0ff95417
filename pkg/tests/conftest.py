from pathlib import Path

import pytest

from hmknf.parser import parse_kb

KB_DIR = Path(__file__).resolve().parent.parent / "kbs"


def load(name: str):
    return parse_kb((KB_DIR / f"{name}.kb").read_text())


@pytest.fixture(scope="session")
def k1():
    return load("k1")


@pytest.fixture(scope="session")
def k2():
    return load("k2")


@pytest.fixture(scope="session")
def k3():
    return load("k3")


@pytest.fixture(scope="session")
def k4():
    return load("k4")


@pytest.fixture(scope="session")
def volunteer():
    return load("volunteer")


@pytest.fixture(scope="session")
def p_not_q():
    return load("p_not_q")
