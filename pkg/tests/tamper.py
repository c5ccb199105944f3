"""Single-integer mutations of certificate JSON."""
from __future__ import annotations

import copy
import random

from domcert.certificates import load_any, verify_any


def int_paths(obj, path=()):
    if isinstance(obj, bool):
        return
    if isinstance(obj, int):
        yield path
    elif isinstance(obj, dict):
        for k in sorted(obj):
            yield from int_paths(obj[k], path + (k,))
    elif isinstance(obj, list):
        for i, x in enumerate(obj):
            yield from int_paths(x, path + (i,))


def mutate(data: dict, rng: random.Random) -> tuple[dict, tuple, int]:
    paths = list(int_paths(data))
    path = rng.choice(paths)
    delta = rng.choice([-2, -1, 1, 2, 3])
    out = copy.deepcopy(data)
    node = out
    for key in path[:-1]:
        node = node[key]
    node[path[-1]] += delta
    return out, path, delta


def rejected(data: dict) -> bool:
    try:
        obj = load_any(data)
    except (KeyError, TypeError, ValueError, IndexError):
        return True
    return not verify_any(obj)
