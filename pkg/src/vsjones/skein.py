"""Skein-recursive bracket, written independently of the state-sum code.

Crossings are expanded one at a time with the local coefficients

    positive:  -A^-2 <oriented> - A^-4 <disoriented>
    negative:  -A^2  <oriented> - A^4  <disoriented>
    singular:  (-A^2 - A^-2) <oriented> + (-A^4 - A^-4) <disoriented>

Each leaf is a collection of closed curves.  Adjacent source/sink pairs cancel
and virtual crossings do not matter, so a leaf is worth ``(-A^2 - A^-2)``
per curve.  Orientation is irrelevant at that point and the recursion tracks
only which port is tied to which.
"""
from __future__ import annotations

from .diagram import Diagram, CrossingKind
from .laurent import DELTA, DELTA4, LaurentPoly

_COEFFS = {
    CrossingKind.POSITIVE: (LaurentPoly({-2: -1}), LaurentPoly({-4: -1})),
    CrossingKind.NEGATIVE: (LaurentPoly({2: -1}), LaurentPoly({4: -1})),
    CrossingKind.SINGULAR: (DELTA, DELTA4),
}

_ORIENTED = (("s1_in", "s2_out"), ("s2_in", "s1_out"))
_DISORIENTED = (("s1_in", "s2_in"), ("s1_out", "s2_out"))
_STRAIGHT = (("s1_in", "s1_out"), ("s2_in", "s2_out"))


def _splice(ties: dict, u, v) -> int:
    """Remove ports ``u`` and ``v`` and tie their partners; return 1 if a loop closed."""
    pu, pv = ties.pop(u), ties.pop(v)
    if pu == v:
        return 1
    ties[pu] = pv
    ties[pv] = pu
    return 0


def _initial_ties(d: Diagram) -> dict:
    tail = {}
    for x in d.crossings:
        tail[x.s1_out] = (x.id, "s1_out")
        tail[x.s2_out] = (x.id, "s2_out")
    ties = {}
    for x in d.crossings:
        for arc, port in ((x.s1_in, "s1_in"), (x.s2_in, "s2_in")):
            a, b = (x.id, port), tail[arc]
            ties[a] = b
            ties[b] = a
    return ties


def _expand(ties: dict, pending: list, loops: int) -> LaurentPoly:
    if not pending:
        return DELTA ** loops
    (cid, kind), rest = pending[0], pending[1:]
    c_or, c_dis = _COEFFS[kind]
    total = LaurentPoly()
    for coeff, pairing in ((c_or, _ORIENTED), (c_dis, _DISORIENTED)):
        t = dict(ties)
        closed = sum(_splice(t, (cid, p), (cid, q)) for p, q in pairing)
        total = total + coeff * _expand(t, rest, loops + closed)
    return total


def bracket_skein(d: Diagram) -> LaurentPoly:
    ties = _initial_ties(d)
    loops = d.free_loops
    for x in d.crossings:
        if x.kind is CrossingKind.VIRTUAL:
            loops += sum(_splice(ties, (x.id, p), (x.id, q)) for p, q in _STRAIGHT)
    pending = [(x.id, x.kind) for x in d.crossings if x.kind is not CrossingKind.VIRTUAL]
    return _expand(ties, pending, loops)
