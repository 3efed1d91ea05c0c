"""Vendored golden values: published series displays and OEIS terms.

Everything is stored as plain text with provenance headers and loaded
here; nothing is ever fetched from the network.
"""

from __future__ import annotations

from importlib import resources
from typing import List


def _lines(name: str) -> List[str]:
    text = resources.files("skewdyck.data").joinpath(name).read_text(encoding="utf-8")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def a128729_terms() -> List[int]:
    """First 20 terms of the half-length avoidance sequence."""
    return [int(ln) for ln in _lines("a128729.txt")]


def _rows(name: str) -> List[List[int]]:
    rows = []
    for ln in _lines(name):
        label, _, body = ln.partition(":")
        assert int(label) == len(rows), f"non-contiguous row {label} in {name}"
        rows.append([int(tok) for tok in body.split()])
    return rows


def a128728_rows() -> List[List[int]]:
    """Marker triangle rows 0..7 (20 terms read by rows)."""
    return _rows("a128728.txt")


def level0_display() -> List[int]:
    """Published half-length display of the avoidance series (9 terms)."""
    return [int(tok) for tok in _lines("level0_series.txt")[0].split()]


def utilde_display() -> List[int]:
    """Published kernel-root display as utilde coefficients, z^0..z^14."""
    return [int(tok) for tok in _lines("u1_series.txt")[0].split()]


def bivariate_display_rows() -> List[List[int]]:
    """Published marker-polynomial rows 0..6 of the level-0 series."""
    return _rows("bivariate_rows.txt")
