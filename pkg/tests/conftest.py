from __future__ import annotations

import sys
from pathlib import Path

import pytest

from rlkit import corpus
from rlkit.modelgen import algebras_up_to

sys.path.insert(0, str(Path(__file__).parent))

CORPUS = corpus.load_all()
SMALL = list(algebras_up_to(5))  # 37 algebras of order 1..5
TINY = list(algebras_up_to(4))


def el(A, *names):
    return [A.index(s) for s in names]


def members(F):
    return set(F.names())


@pytest.fixture(scope="session")
def ex():
    return CORPUS


def corpus_and_small():
    return [pytest.param(A, id=A.name) for A in list(CORPUS.values()) + SMALL]


def corpus_params():
    return [pytest.param(A, id=A.name) for A in CORPUS.values()]


# acceptance criteria record their verdicts here; printed after the run
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        verdict, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}")
