"""Reference data shipped with the package: class counts, representative
codes and autocorrelation rows.

Set BASEQ_FIXTURES to a directory holding files of the same names to use
another copy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

__all__ = ["NafRow", "fixture_dir", "class_counts", "representatives", "naf_rows"]


@dataclass(frozen=True)
class NafRow:
    n: int
    code: str
    nafs: tuple[tuple[int, ...], ...]   # A, B, C, D
    recomputed: bool


def fixture_dir() -> Path:
    env = os.environ.get("BASEQ_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("baseq") / "data"))


def _rows(name: str, root=None):
    path = Path(root or fixture_dir()) / name
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line and not line.startswith("#"):
                yield line.split("\t")


def class_counts(root=None) -> dict[int, tuple[int, int]]:
    """n -> (classes, normal classes)."""
    return {int(n): (int(c), int(k)) for n, c, k in _rows("class_counts.tsv", root)}


def representatives(root=None) -> dict[int, list[str]]:
    out: dict[int, list[str]] = {}
    for n, code in _rows("representatives.txt", root):
        out.setdefault(int(n), []).append(code)
    return out


def _ints(text):
    return tuple(int(v) for v in text.split(",")) if text else ()


def naf_rows(root=None) -> list[NafRow]:
    return [NafRow(int(n), code, tuple(_ints(v) for v in (na, nb, nc, nd)), src == "recomputed")
            for n, code, na, nb, nc, nd, src in _rows("naf_rows.tsv", root)]
