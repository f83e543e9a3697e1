"""Approximate l0-penalized regularization paths (SBR, CSBR, l0-PD)."""

import json

from ._l0path import (
    L0pathError,
    PathResult,
    __version__,
    csbr,
    draw_instance,
    ic_select,
    l0pd,
    mdlc_select,
    oracle_check,
    sbr,
)
from ._l0path import bench_json as _bench_json


def bench(scenario, algos=("l0pd",), trials=30, seed=0):
    """Run a benchmark campaign and return the results as a dict."""
    return json.loads(_bench_json(scenario, list(algos), trials, seed))


__all__ = [
    "L0pathError",
    "PathResult",
    "__version__",
    "bench",
    "csbr",
    "draw_instance",
    "ic_select",
    "l0pd",
    "mdlc_select",
    "oracle_check",
    "sbr",
]
