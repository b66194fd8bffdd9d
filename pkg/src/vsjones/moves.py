"""Extended Reidemeister moves.

The local moves (R1, V1, R2, V2) are arc surgeries.  Arc arguments are arc
tokens of the diagram, or ``@loop<i>`` for the ``i``-th free loop.  The other
moves come as hand-encoded before/after pairs built from braid closures.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .braids import closure
from .diagram import (LOOP_PREFIX, Crossing, CrossingKind, Diagram, DiagramError,
                      canonical, is_realizable, validate)

MOVE_NAMES = ("R1", "R2", "R3", "RS1", "RS2", "V1", "V2", "V3v", "V3c", "V3s")


class MoveError(DiagramError):
    pass


class UnknownArc(MoveError, KeyError):
    pass


class SameArc(MoveError):
    pass


@dataclass(frozen=True)
class MovePair:
    name: str
    before: Diagram
    after: Diagram
    note: str = ""


class _Surgery:
    """Mutable scratch copy of a diagram used while splicing in new crossings."""

    def __init__(self, d: Diagram):
        self.d = d
        self.rows = {x.id: list(x.ports) for x in d.crossings}
        self.kinds = {x.id: x.kind for x in d.crossings}
        self.loops_used: set[int] = set()
        self.next_id = max(self.rows, default=0) + 1
        self.taken = set(d.arcs())
        self.counter = 0

    def fresh(self) -> str:
        while True:
            self.counter += 1
            tok = f"m{self.counter}"
            if tok not in self.taken:
                self.taken.add(tok)
                return tok

    def route(self, token: str, n: int) -> list[str]:
        """Cut ``token`` for ``n`` new crossings; return ``n + 1`` arc names.

        Piece ``j`` enters new crossing ``j``; piece ``j + 1`` leaves it.  For a
        free loop the last piece is the first one.
        """
        if token.startswith(LOOP_PREFIX):
            idx = token[len(LOOP_PREFIX):]
            if not idx.isdigit() or int(idx) >= self.d.free_loops:
                raise UnknownArc(f"no free loop {token!r}")
            self.loops_used.add(int(idx))
            first = self.fresh()
            return [first] + [self.fresh() for _ in range(n - 1)] + [first]
        if token not in self.d.index["head"]:
            raise UnknownArc(f"no arc {token!r}")
        head, strand = self.d.index["head"][token]
        pieces = [token] + [self.fresh() for _ in range(n)]
        # re-point the original head at the last piece
        self.rows[head.id][0 if strand == 1 else 2] = pieces[-1]
        return pieces

    def add(self, kind: CrossingKind, s1: tuple[str, str], s2: tuple[str, str]) -> int:
        cid = self.next_id
        self.next_id += 1
        self.rows[cid] = [s1[0], s1[1], s2[0], s2[1]]
        self.kinds[cid] = kind
        return cid

    def result(self) -> Diagram:
        xs = tuple(Crossing(cid, self.kinds[cid], *ports) for cid, ports in self.rows.items())
        return validate(Diagram(xs, self.d.free_loops - len(self.loops_used)))


def _sign_kind(sign) -> CrossingKind:
    if sign in (1, "+", CrossingKind.POSITIVE):
        return CrossingKind.POSITIVE
    if sign in (-1, "-", CrossingKind.NEGATIVE):
        return CrossingKind.NEGATIVE
    raise ValueError(f"sign must be +1/-1, got {sign!r}")


def _kink(d: Diagram, arc: str, kind: CrossingKind) -> Diagram:
    s = _Surgery(d)
    x_in, loop, x_out = s.route(arc, 2)
    # the strand passes the new crossing twice, with the loop in between
    s.add(kind, (x_in, loop), (loop, x_out))
    return s.result()


def insert_r1(d: Diagram, arc: str, sign=1) -> Diagram:
    """Add a classical kink of the given sign on ``arc``."""
    return _kink(d, arc, _sign_kind(sign))


def insert_v1(d: Diagram, arc: str) -> Diagram:
    """Add a virtual kink on ``arc``."""
    return _kink(d, arc, CrossingKind.VIRTUAL)


def _clasp(d: Diagram, arc1: str, arc2: str, kinds: tuple[CrossingKind, CrossingKind],
           variant: str) -> Diagram:
    if arc1 == arc2:
        raise SameArc(f"cannot clasp arc {arc1!r} with itself")
    if variant not in ("parallel", "antiparallel"):
        raise ValueError(f"variant must be 'parallel' or 'antiparallel', got {variant!r}")
    s = _Surgery(d)
    x = s.route(arc1, 2)
    y = s.route(arc2, 2)
    if variant == "parallel":
        s.add(kinds[0], (x[0], x[1]), (y[0], y[1]))
        s.add(kinds[1], (x[1], x[2]), (y[1], y[2]))
    else:
        s.add(kinds[0], (x[0], x[1]), (y[1], y[2]))
        s.add(kinds[1], (x[1], x[2]), (y[0], y[1]))
    return s.result()


def insert_r2(d: Diagram, arc1: str, arc2: str, variant: str = "parallel",
              first_sign=1) -> Diagram:
    """Push ``arc1`` across ``arc2``: two classical crossings of opposite sign.

    ``first_sign`` is the sign of the crossing met first along ``arc1``.
    """
    k = _sign_kind(first_sign)
    other = CrossingKind.NEGATIVE if k is CrossingKind.POSITIVE else CrossingKind.POSITIVE
    return _clasp(d, arc1, arc2, (k, other), variant)


def insert_v2(d: Diagram, arc1: str, arc2: str, variant: str = "parallel") -> Diagram:
    return _clasp(d, arc1, arc2, (CrossingKind.VIRTUAL, CrossingKind.VIRTUAL), variant)


def arc_tokens(d: Diagram) -> list[str]:
    return d.arcs() + d.loop_tokens()


def kink_sites(d: Diagram):
    """``(name, diagram)`` for every R1 (both signs) and V1 insertion."""
    for arc in arc_tokens(d):
        yield f"R1+@{arc}", "R1", insert_r1(d, arc, 1)
        yield f"R1-@{arc}", "R1", insert_r1(d, arc, -1)
        yield f"V1@{arc}", "V1", insert_v1(d, arc)


def clasp_sites(d: Diagram):
    """Every planar-realizable R2 and V2 insertion between two distinct arcs.

    Inserting between arcs that do not share a face would need extra virtual
    crossings to draw; those sites are skipped.
    """
    for a1, a2 in itertools.combinations(arc_tokens(d), 2):
        for variant in ("parallel", "antiparallel"):
            for sign in (1, -1):
                d2 = insert_r2(d, a1, a2, variant, sign)
                if is_realizable(d2):
                    yield f"R2{variant[0]}{'+' if sign > 0 else '-'}@{a1},{a2}", "R2", d2
            d2 = insert_v2(d, a1, a2, variant)
            if is_realizable(d2):
                yield f"V2{variant[0]}@{a1},{a2}", "V2", d2


# (name, before word, after word); every word pair is a single braid relation
_RELATIONS = [
    ("R3", "p1 p2 p1", "p2 p1 p2"),
    ("R3", "n1 n2 n1", "n2 n1 n2"),
    ("R3", "p1 p2 n1", "n2 p1 p2"),
    ("RS1", "p1 p2 t1", "t2 p1 p2"),
    ("RS1", "n1 t2 p1", "p2 t1 n2"),
    ("RS2", "p1 t1", "t1 p1"),
    ("RS2", "n1 t1", "t1 n1"),
    ("V3v", "v1 v2 v1", "v2 v1 v2"),
    ("V3c", "v1 p2 v1", "v2 p1 v2"),
    ("V3c", "v1 n2 v1", "v2 n1 v2"),
    ("V3s", "v1 t2 v1", "v2 t1 v2"),
]

# braid words appended to both sides so the closures are not trivial
_CONTEXTS = ["", "p1 v2", "t1 n2", "v1 t2 p1"]


def builtin_fixture_pairs() -> list[MovePair]:
    pairs = []
    for name, lhs, rhs in _RELATIONS:
        for ctx in _CONTEXTS:
            before = closure(f"{lhs} {ctx}".strip(), 3)
            after = closure(f"{rhs} {ctx}".strip(), 3)
            pairs.append(MovePair(name, before, after, f"closure of [{lhs}|{ctx}] vs [{rhs}|{ctx}]"))

    base = closure("t1 p1 v1 n1")
    for arc in ("1", "3"):
        pairs.append(MovePair("R1", base, canonical(insert_r1(base, arc, 1)), f"positive kink on {arc}"))
        pairs.append(MovePair("R1", base, canonical(insert_r1(base, arc, -1)), f"negative kink on {arc}"))
        pairs.append(MovePair("V1", base, canonical(insert_v1(base, arc)), f"virtual kink on {arc}"))
    for _, kind, d2 in clasp_sites(base):
        pairs.append(MovePair(kind, base, canonical(d2), "clasp"))
        if sum(p.name == "R2" for p in pairs) >= 4 and sum(p.name == "V2" for p in pairs) >= 4:
            break
    two = Diagram(free_loops=2)
    pairs.append(MovePair("R2", two, insert_r2(two, "@loop0", "@loop1"), "two free loops"))
    pairs.append(MovePair("V2", two, insert_v2(two, "@loop0", "@loop1"), "two free loops"))
    return pairs
