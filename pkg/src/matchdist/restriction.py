"""Restriction of a rectangle module to a positive-slope line.

The restriction is a single-parameter module in the weighted line
parameter: each rectangle the line crosses contributes one half-open bar
from the weighted entry parameter to the weighted exit parameter.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple

from .geometry import PosLine, weighted_param
from .persistence import RectModule


class Bar(NamedTuple):
    """Half-open interval [birth, death) with birth < death."""

    birth: Fraction
    death: Fraction


Barcode = List[Bar]


def restrict(mod: RectModule, line: PosLine) -> Barcode:
    """Weighted barcode of the module along ``line``.

    The line enters a rectangle at the weighted push of the lower corner
    and leaves at min(d1, (d2 - q)/m) scaled by the same weight; empty
    crossings contribute nothing.  Multiplicities expand to repeated
    bars.
    """
    wgt = min(Fraction(1), line.m)
    bars: Barcode = []
    for r in mod.rectangles:
        birth = weighted_param(line, r.lower)
        d1, d2 = r.upper
        death = wgt * min(Fraction(d1), (Fraction(d2) - line.q) / line.m)
        if birth < death:
            bars.extend([Bar(birth, death)] * r.multiplicity)
    return bars
