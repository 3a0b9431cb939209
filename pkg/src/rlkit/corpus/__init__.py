"""Bundled algebra documents."""

from __future__ import annotations

from importlib import resources

from ..algebra import Algebra
from ..document import parse


def names() -> list[str]:
    root = resources.files(__name__)
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".rl"))


def text(name: str) -> str:
    if not name.endswith(".rl"):
        name += ".rl"
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")


def load(name: str) -> Algebra:
    return parse(text(name))


def load_all() -> dict[str, Algebra]:
    return {n: load(n) for n in names()}
