"""Closed virtual singular braids.

Used only to build planar fixture diagrams; this is not an input format.  A
word is a whitespace-separated string of letters ``p<i>`` (positive
classical), ``n<i>`` (negative classical), ``t<i>`` (singular) and ``v<i>``
(virtual), each acting on strand positions ``i`` and ``i+1`` (1-based).
"""
from __future__ import annotations

import re

from .diagram import Crossing, CrossingKind, Diagram, canonical, validate

_LETTERS = {"p": CrossingKind.POSITIVE, "n": CrossingKind.NEGATIVE,
            "t": CrossingKind.SINGULAR, "v": CrossingKind.VIRTUAL}


def parse_word(word: str) -> list[tuple[CrossingKind, int]]:
    out = []
    for tok in word.split():
        m = re.fullmatch(r"([pntv])(\d+)", tok)
        if not m or int(m.group(2)) < 1:
            raise ValueError(f"bad braid letter {tok!r}")
        out.append((_LETTERS[m.group(1)], int(m.group(2))))
    return out


def closure(word: str | list, strands: int | None = None) -> Diagram:
    """Closure of a braid word; all strands run upward, so the result is planar."""
    letters = parse_word(word) if isinstance(word, str) else list(word)
    need = max((i + 1 for _, i in letters), default=1)
    strands = need if strands is None else strands
    if strands < need:
        raise ValueError(f"word needs {need} strands, got {strands}")

    fresh = iter(range(1, 10 ** 9))
    start = [str(next(fresh)) for _ in range(strands)]
    pos = list(start)
    raw = []
    for cid, (kind, i) in enumerate(letters, start=1):
        left, right = pos[i - 1], pos[i]
        o1, o2 = str(next(fresh)), str(next(fresh))
        raw.append((cid, kind, left, o1, right, o2))
        pos[i - 1], pos[i] = o2, o1

    # close up: the last arc at each position is the first one
    alias = {}
    for s, f in zip(start, pos):
        if s != f:
            alias[f] = s
    free = sum(1 for s, f in zip(start, pos) if s == f)
    xs = tuple(Crossing(cid, kind, *(alias.get(a, a) for a in ports))
               for cid, kind, *ports in raw)
    return validate(canonical(Diagram(xs, free)))
