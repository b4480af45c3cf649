"""Severi divisors and wall arithmetic on Hilbert schemes of points on surfaces."""

import os
from pathlib import Path

_bundled = Path(__file__).resolve().parent / "fixtures"
if _bundled.is_dir():
    os.environ.setdefault("HILBCONE_FIXTURES", str(_bundled))

from ._core import (  # noqa: E402
    arithmetic_genus,
    cone,
    cone_contains,
    enumerate_hirzebruch,
    enumerate_k3,
    enumerate_p2,
    h0,
    imposing_wall,
    intersect_subspace,
    load_fixture,
    locate,
    pair_curve,
    plot,
    ramification_report,
    reproduce,
    restrict_walls,
    severi_class,
    slope_decompose,
    transport_down,
    transport_up,
    transport_wallset_down,
)

__all__ = [
    "arithmetic_genus",
    "cone",
    "cone_contains",
    "enumerate_hirzebruch",
    "enumerate_k3",
    "enumerate_p2",
    "h0",
    "imposing_wall",
    "intersect_subspace",
    "load_fixture",
    "locate",
    "pair_curve",
    "plot",
    "ramification_report",
    "reproduce",
    "restrict_walls",
    "severi_class",
    "slope_decompose",
    "transport_down",
    "transport_up",
    "transport_wallset_down",
]
