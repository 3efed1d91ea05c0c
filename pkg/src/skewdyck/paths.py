"""Skew path words: validity rules, pattern counting, brute-force
enumeration, and an SVG renderer.

A path is a word over three steps: Up (+1), DownBlack (-1) and DownRed
(-1, the encoded left step).  A word is valid when it never dips below
the axis and never contains the factors Up-DownRed or DownRed-Up.  The
contiguous factor Up-DownBlack-DownRed is the marked pattern: forbidden
in avoidance counts, tallied by the marker t otherwise.

The enumerator here is the ground-truth oracle for every other module:
it extends only valid prefixes and applies nothing but the local word
rules, so it shares no machinery with the automaton or the generating
functions it is used to check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

ORACLE_CAP = 24


class CapExceeded(Exception):
    """Requested brute-force length beyond the configured oracle cap."""


class Step(enum.IntEnum):
    # Integer values fix the lexicographic enumeration order.
    UP = 0
    DOWN_BLACK = 1
    DOWN_RED = 2

    @property
    def displacement(self) -> int:
        return 1 if self is Step.UP else -1

    @property
    def letter(self) -> str:
        return {Step.UP: "U", Step.DOWN_BLACK: "D", Step.DOWN_RED: "R"}[self]


_LETTER_TO_STEP = {
    "U": Step.UP,
    "D": Step.DOWN_BLACK,
    "R": Step.DOWN_RED,
    "L": Step.DOWN_RED,  # alias: the red step encodes the left step
}


def parse_word(text: str) -> tuple[Step, ...]:
    steps = []
    for ch in text.strip().upper():
        if ch not in _LETTER_TO_STEP:
            raise ValueError(f"unknown step letter {ch!r} (expected U, D, R)")
        steps.append(_LETTER_TO_STEP[ch])
    return tuple(steps)


class Rule(enum.Enum):
    BELOW_AXIS = "BelowAxis"
    UP_RED = "UpRed"
    RED_UP = "RedUp"


@dataclass(frozen=True)
class Violation:
    index: int
    rule: Rule


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violation: Optional[Violation] = None


def validate(word: Sequence[Step]) -> ValidityReport:
    """Check the three validity rules, reporting the earliest violation.

    At a tied index the axis rule is reported before the factor rules.
    The index of a factor violation is the position of its first step.
    """
    level = 0
    for i, step in enumerate(word):
        level += step.displacement
        if level < 0:
            return ValidityReport(False, Violation(i, Rule.BELOW_AXIS))
        if i + 1 < len(word):
            nxt = word[i + 1]
            if step is Step.UP and nxt is Step.DOWN_RED:
                return ValidityReport(False, Violation(i, Rule.UP_RED))
            if step is Step.DOWN_RED and nxt is Step.UP:
                return ValidityReport(False, Violation(i, Rule.RED_UP))
    return ValidityReport(True)


def count_udr(word: Sequence[Step]) -> int:
    """Number of contiguous Up, DownBlack, DownRed factors.

    Occurrences cannot overlap: a DownRed is never followed by Up in a
    valid word, so consecutive matches are at least three steps apart.
    """
    return sum(
        1
        for i in range(len(word) - 2)
        if word[i] is Step.UP
        and word[i + 1] is Step.DOWN_BLACK
        and word[i + 2] is Step.DOWN_RED
    )


@dataclass(frozen=True)
class SkewPath:
    """A validated step word with its level profile and pattern count."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        report = validate(self.steps)
        if not report.valid:
            v = report.violation
            raise ValueError(f"invalid word: {v.rule.value} at index {v.index}")

    @classmethod
    def from_word(cls, text: str) -> "SkewPath":
        return cls(parse_word(text))

    @cached_property
    def levels(self) -> tuple[int, ...]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s.displacement)
        return tuple(out)

    @cached_property
    def udr_count(self) -> int:
        return count_udr(self.steps)

    @property
    def end_level(self) -> int:
        return self.levels[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def word(self) -> str:
        return "".join(s.letter for s in self.steps)


def enumerate_paths(
    length: int,
    end_level: Optional[int] = None,
    forbid_udr: bool = False,
    cap: int = ORACLE_CAP,
) -> Iterator[SkewPath]:
    """Yield every valid path of exactly `length` steps, in lexicographic
    step order (Up < DownBlack < DownRed).

    Only valid prefixes are extended, so the search tree is the prefix
    tree of valid words, not the full 3^length cube.  An unreachable end
    level yields nothing.
    """
    if length > cap:
        raise CapExceeded(f"length {length} exceeds oracle cap {cap}")
    if length < 0:
        raise ValueError("length must be nonnegative")

    prefix: list[Step] = []

    def reachable(level: int, remaining: int) -> bool:
        if end_level is None:
            return True
        gap = abs(end_level - level)
        return gap <= remaining and (remaining - gap) % 2 == 0

    def walk(level: int) -> Iterator[SkewPath]:
        depth = len(prefix)
        if depth == length:
            if end_level is None or level == end_level:
                yield SkewPath(tuple(prefix))
            return
        last = prefix[-1] if prefix else None
        for step in (Step.UP, Step.DOWN_BLACK, Step.DOWN_RED):
            nlevel = level + step.displacement
            if nlevel < 0:
                continue
            if step is Step.UP and last is Step.DOWN_RED:
                continue
            if step is Step.DOWN_RED and last is Step.UP:
                continue
            if (
                forbid_udr
                and step is Step.DOWN_RED
                and depth >= 2
                and prefix[-1] is Step.DOWN_BLACK
                and prefix[-2] is Step.UP
            ):
                continue
            if not reachable(nlevel, length - depth - 1):
                continue
            prefix.append(step)
            yield from walk(nlevel)
            prefix.pop()

    yield from walk(0)


def udr_profile(max_length: int, cap: int = ORACLE_CAP):
    """Brute-force pattern histograms for every length up to max_length.

    Returns hist with hist[m][level][j] = number of valid words of
    length m ending at `level` with exactly j pattern occurrences.  A
    single walk over the prefix tree of valid words covers all lengths
    at once; every prefix of a valid word is itself valid.
    """
    if max_length > cap:
        raise CapExceeded(f"length {max_length} exceeds oracle cap {cap}")
    hist: list[dict[int, dict[int, int]]] = [dict() for _ in range(max_length + 1)]
    hist[0][0] = {0: 1}

    def record(depth, level, udr):
        by_level = hist[depth]
        counter = by_level.setdefault(level, {})
        counter[udr] = counter.get(udr, 0) + 1

    def walk(depth, level, last, second_last, udr):
        if depth == max_length:
            return
        # Up
        if last is not Step.DOWN_RED:
            record(depth + 1, level + 1, udr)
            walk(depth + 1, level + 1, Step.UP, last, udr)
        if level > 0:
            # DownBlack
            record(depth + 1, level - 1, udr)
            walk(depth + 1, level - 1, Step.DOWN_BLACK, last, udr)
            # DownRed
            if last is not Step.UP:
                bump = 1 if (last is Step.DOWN_BLACK and second_last is Step.UP) else 0
                record(depth + 1, level - 1, udr + bump)
                walk(depth + 1, level - 1, Step.DOWN_RED, last, udr + bump)

    walk(0, 0, None, None, 0)
    return hist


_RED = "#cc0022"
_BLACK = "#000000"


def render_svg(path: SkewPath, unit_px: int = 24, color_map=None) -> str:
    """Standalone SVG 1.1 drawing, one segment per step.

    Up is drawn as (+1,+1); both down steps as (+1,-1), the red one in
    the red stroke.  Output is byte-stable for fixed inputs.
    """
    colors = {"up": _BLACK, "down_black": _BLACK, "down_red": _RED}
    if color_map:
        colors.update(color_map)
    margin = unit_px
    top = max(path.levels) if path.levels else 0
    width = len(path) * unit_px + 2 * margin
    height = top * unit_px + 2 * margin

    def x(i):
        return margin + i * unit_px

    def y(level):
        return margin + (top - level) * unit_px

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{x(0)}" y1="{y(0)}" x2="{x(len(path))}" y2="{y(0)}" '
        f'stroke="#bbbbbb" stroke-dasharray="4 4" stroke-width="1"/>',
    ]
    key = {Step.UP: "up", Step.DOWN_BLACK: "down_black", Step.DOWN_RED: "down_red"}
    for i, step in enumerate(path.steps):
        lines.append(
            f'<line x1="{x(i)}" y1="{y(path.levels[i])}" '
            f'x2="{x(i + 1)}" y2="{y(path.levels[i + 1])}" '
            f'stroke="{colors[key[step]]}" stroke-width="2" '
            f'stroke-linecap="round"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
