"""Built-in test arrangements."""
from __future__ import annotations

from .arrangement import Arrangement, normalize_arrangement

_RAW = {
    "generic3": (2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)]),
    "generic4": (2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1), ((1, -1), 2)]),
    "pencil3": (2, [((1, 0), 0), ((0, 1), 0), ((1, -1), 0)]),
    "pencil3_plus1": (2, [((1, 0), 0), ((0, 1), 0), ((1, -1), 0), ((1, 2), 2)]),
    "cross": (2, [((1, 0), 0), ((0, 1), 0)]),
    "strip": (2, [((1, 0), 0), ((1, 0), 1), ((0, 1), 0)]),
    "near_pencil5": (2, [((1, 0), 0), ((0, 1), 0), ((1, -1), 0), ((1, 1), 0), ((1, 2), 1)]),
    "braid_like": (2, [((1, 0), 0), ((0, 1), 0), ((1, -1), 0), ((1, 1), 1)]),
    "points1": (1, [((1,), 0)]),
    "points2": (1, [((1,), 0), ((1,), 1)]),
    "points3": (1, [((1,), 0), ((1,), 1), ((1,), 2)]),
}

# extra shapes with several parallel classes; used by the test-suite only
EXTRA = {
    "grid": (2, [((1, 0), 0), ((1, 0), 1), ((0, 1), 0), ((0, 1), 1)]),
    "grid_diagonal": (2, [((1, 0), 0), ((1, 0), 1), ((0, 1), 0), ((0, 1), 1), ((1, -1), 0)]),
    "triangle_parallel": (2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1), ((1, 1), 3)]),
}


def corpus(extra: bool = False) -> dict[str, Arrangement]:
    raw = dict(_RAW, **EXTRA) if extra else _RAW
    return {name: normalize_arrangement(eqs, ell) for name, (ell, eqs) in raw.items()}


def planar(extra: bool = False) -> dict[str, Arrangement]:
    return {k: A for k, A in corpus(extra).items() if A.ell == 2}


def get(name: str) -> Arrangement:
    ell, eqs = dict(_RAW, **EXTRA)[name]
    return normalize_arrangement(eqs, ell)
