"""Exact counting by dynamic programming over the four-layer automaton.

States are pairs (layer, level).  Layer F holds the start and everything
reached by an up step, G is reached by a down-black step out of F (the
"down right after up" layer), H by any other down-black step, K by a
down-red step.  The red edge out of G completes the up, down-black,
down-red pattern and carries the marker t; there is no up edge out of K
and no red edge out of F, which encodes the two forbidden factors.

Weights are marker polynomials with arbitrary-precision integer
coefficients; counts leave 64-bit range well before length 60.
"""

from __future__ import annotations

import enum
from typing import Dict, Tuple

from .rings import QT, TPoly
from .series import ZSeries


class Layer(enum.Enum):
    F = "F"
    G = "G"
    H = "H"
    K = "K"


class Mode(enum.Enum):
    TRACK = "track"    # full marker polynomial
    FORBID = "forbid"  # coefficient of t^0 (pattern avoided)
    TOTAL = "total"    # evaluation at t=1 (pattern ignored)


StateVector = Dict[Tuple[Layer, int], TPoly]

_T = TPoly((0, 1))
_ONE = TPoly(1)


def initial_state() -> StateVector:
    return {(Layer.F, 0): _ONE}


def step(state: StateVector, red_mark: TPoly = _T) -> StateVector:
    """One automaton step.  red_mark is the weight of the G -> K edge;
    the default marks it with t, and the zero polynomial deletes it."""
    new: StateVector = {}

    def add(layer, level, weight):
        key = (layer, level)
        if key in new:
            new[key] = new[key] + weight
        else:
            new[key] = weight

    for (layer, level), w in state.items():
        if level < 0:
            raise ValueError("state vector contains a negative level")
        if layer in (Layer.F, Layer.G, Layer.H):
            add(Layer.F, level + 1, w)
        if level > 0:
            if layer is Layer.F:
                add(Layer.G, level - 1, w)
            else:
                add(Layer.H, level - 1, w)
            if layer is Layer.G:
                marked = w * red_mark
                if marked:
                    add(Layer.K, level - 1, marked)
            elif layer in (Layer.H, Layer.K):
                add(Layer.K, level - 1, w)
    return new


def run(length: int, red_mark: TPoly = _T) -> StateVector:
    state = initial_state()
    for _ in range(length):
        state = step(state, red_mark)
    return state


def count(length: int, end_level: int, mode: Mode = Mode.TRACK):
    """Weight of all paths of the given length ending at end_level,
    summed over layers.  TRACK returns the marker polynomial, FORBID its
    constant coefficient, TOTAL its value at t=1 (both as ints)."""
    if length < 0 or end_level < 0:
        raise ValueError("length and end level must be nonnegative")
    state = run(length)
    total = TPoly()
    for (layer, level), w in state.items():
        if level == end_level:
            total = total + w
    if mode is Mode.TRACK:
        return total
    if mode is Mode.FORBID:
        return total.coefficient(0)
    return total(1)


def layer_series(layer: Layer, level: int, order: int) -> ZSeries:
    """Generating series of one (layer, level) cell: the coefficient of
    z^m is its marker-polynomial weight after m steps."""
    if order < 1:
        raise ValueError("order must be >= 1")
    state = initial_state()
    coeffs = [state.get((layer, level), TPoly())]
    for _ in range(order - 1):
        state = step(state)
        coeffs.append(state.get((layer, level), TPoly()))
    return ZSeries(coeffs, order, QT)
