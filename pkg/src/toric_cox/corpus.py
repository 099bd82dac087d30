"""Bundled example fans: the smooth complete corpus plus two non-examples."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .fans import Fan, fan_from_json

SMOOTH_COMPLETE = (
    "p1",
    "p2",
    "p1xp1",
    "hirzebruch_0",
    "hirzebruch_1",
    "hirzebruch_2",
    "hirzebruch_3",
    "delpezzo6",
)

NON_EXAMPLES = ("singular_cone", "incomplete_a2")


def corpus_path(name: str) -> Path:
    path = resources.files("toric_cox").joinpath("data", f"{name}.json")
    return Path(str(path))


def load_fan(name: str) -> Fan:
    return fan_from_json(corpus_path(name).read_text())
