"""Exact matching distance for 2-parameter persistence modules.

The distance between two rectangle-decomposable modules is the maximum,
over an explicitly enumerated finite set of positive-slope lines, of the
weighted bottleneck distance between the restricted barcodes.  The line
set combines the lub-closed critical values with the switch points
computed by three exact enumeration algorithms.
"""

from .geometry import Orient, Point, PosLine, PushDir, make_line
from .matching import MatchResult, candidate_lines, matching_distance
from .persistence import (
    CritSet,
    Rect,
    RectModule,
    critical_points,
    lub_closure,
    random_rect_module,
)
from .restriction import Bar, restrict
from .bottleneck import bottleneck_distance
from .switchpoints import (
    SwitchPoint,
    all_switch_points,
    alg_2paired,
    alg_2unpaired,
    alg_3vs1,
    dedup,
    theoretical_bound,
)

__all__ = [
    "Bar",
    "CritSet",
    "MatchResult",
    "Orient",
    "Point",
    "PosLine",
    "PushDir",
    "Rect",
    "RectModule",
    "SwitchPoint",
    "alg_2paired",
    "alg_2unpaired",
    "alg_3vs1",
    "all_switch_points",
    "bottleneck_distance",
    "candidate_lines",
    "critical_points",
    "dedup",
    "lub_closure",
    "make_line",
    "matching_distance",
    "random_rect_module",
    "restrict",
    "theoretical_bound",
]
