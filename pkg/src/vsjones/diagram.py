"""Oriented virtual singular link diagrams as abstract 4-valent structures.

A diagram is a list of crossings wired together by directed arcs.  Each
crossing is the transverse meeting of two oriented strands; strand 1 enters
along the arc ``s1_in`` and leaves along ``s1_out``, likewise strand 2.  No
planar embedding is stored.  Crossing-free circles are kept as a bare count.

Text format (one record per line, ``#`` starts a comment)::

    crossing <id> <P|N|S|V> <s1_in> <s1_out> <s2_in> <s2_out>
    loops <count>
"""
from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import networkx as nx

#: prefix of pseudo-arc tokens naming free loops, e.g. ``@loop0``
LOOP_PREFIX = "@loop"


class DiagramError(ValueError):
    """Base class for malformed diagrams."""


class DuplicatePort(DiagramError):
    """An arc fills the same role (in-port or out-port) more than once."""


class DanglingArc(DiagramError):
    """An arc is missing its in-port or its out-port."""


class DuplicateCrossing(DiagramError):
    pass


class DiagramSyntaxError(DiagramError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CrossingKind(enum.Enum):
    POSITIVE = "P"
    NEGATIVE = "N"
    SINGULAR = "S"
    VIRTUAL = "V"

    @property
    def is_classical(self) -> bool:
        return self in (CrossingKind.POSITIVE, CrossingKind.NEGATIVE)

    @property
    def is_resolvable(self) -> bool:
        """Classical and singular crossings get resolved; virtual ones do not."""
        return self is not CrossingKind.VIRTUAL

    @property
    def sign(self) -> int:
        return {CrossingKind.POSITIVE: 1, CrossingKind.NEGATIVE: -1}.get(self, 0)


P, N, S, V = (CrossingKind.POSITIVE, CrossingKind.NEGATIVE,
              CrossingKind.SINGULAR, CrossingKind.VIRTUAL)


@dataclass(frozen=True)
class Crossing:
    id: int
    kind: CrossingKind
    s1_in: str
    s1_out: str
    s2_in: str
    s2_out: str

    @property
    def ports(self) -> tuple[str, str, str, str]:
        return (self.s1_in, self.s1_out, self.s2_in, self.s2_out)

    def with_kind(self, kind: CrossingKind) -> "Crossing":
        return Crossing(self.id, kind, *self.ports)


class Counts(NamedTuple):
    c: int
    s: int
    v: int
    w: int


def arc_key(arc: str):
    """Sort key for arc tokens: integers numerically, then everything else."""
    return (0, int(arc), "") if re.fullmatch(r"-?\d+", arc) else (1, 0, arc)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda x: x.id)))

    @property
    def index(self) -> dict:
        """Cached lookups: arc -> (head crossing, port) and arc -> (tail crossing, port)."""
        if self._index is None:
            head, tail, by_id = {}, {}, {}
            for x in self.crossings:
                by_id[x.id] = x
                head[x.s1_in] = (x, 1)
                head[x.s2_in] = (x, 2)
                tail[x.s1_out] = (x, 1)
                tail[x.s2_out] = (x, 2)
            object.__setattr__(self, "_index", {"head": head, "tail": tail, "id": by_id})
        return self._index

    def crossing(self, cid: int) -> Crossing:
        return self.index["id"][cid]

    def arcs(self) -> list[str]:
        """All arc tokens, sorted with :func:`arc_key`."""
        return sorted({a for x in self.crossings for a in x.ports}, key=arc_key)

    def loop_tokens(self) -> list[str]:
        return [f"{LOOP_PREFIX}{i}" for i in range(self.free_loops)]

    def resolvable(self) -> list[Crossing]:
        return [x for x in self.crossings if x.kind.is_resolvable]

    def replace(self, cid: int, kind: CrossingKind) -> "Diagram":
        return Diagram(tuple(x.with_kind(kind) if x.id == cid else x for x in self.crossings),
                       self.free_loops)

    def __str__(self):
        return serialize(self)


def validate(d: Diagram) -> Diagram:
    """Check the wiring invariants, raising on the first violation."""
    ids = Counter(x.id for x in d.crossings)
    for cid, n in ids.items():
        if n > 1:
            raise DuplicateCrossing(f"crossing id {cid} used {n} times")
    if d.free_loops < 0:
        raise DiagramError("free loop count is negative")
    ins: dict[str, int] = {}
    outs: dict[str, int] = {}
    for x in d.crossings:
        for arc, role, table in ((x.s1_in, "in", ins), (x.s2_in, "in", ins),
                                 (x.s1_out, "out", outs), (x.s2_out, "out", outs)):
            if arc.startswith(LOOP_PREFIX):
                raise DiagramError(f"arc token {arc!r} is reserved")
            if arc in table:
                raise DuplicatePort(
                    f"arc {arc!r} is an {role}-port at crossings {table[arc]} and {x.id}")
            table[arc] = x.id
    for arc, cid in ins.items():
        if arc not in outs:
            raise DanglingArc(f"arc {arc!r} enters crossing {cid} but never leaves one")
    for arc, cid in outs.items():
        if arc not in ins:
            raise DanglingArc(f"arc {arc!r} leaves crossing {cid} but never enters one")
    # closure: follow out-port -> arc -> in-port from every port
    nxt = _straight_successor(d)
    seen: set[str] = set()
    for start in nxt:
        a = start
        while a not in seen:
            seen.add(a)
            a = nxt[a]
        if a not in seen:  # pragma: no cover - a permutation always closes
            raise DanglingArc(f"walk from arc {start!r} does not close")
    return d


def _straight_successor(d: Diagram) -> dict[str, str]:
    """Arc -> next arc when passing straight through every crossing."""
    nxt = {}
    for x in d.crossings:
        nxt[x.s1_in] = x.s1_out
        nxt[x.s2_in] = x.s2_out
    return nxt


_LINE_CROSSING = "crossing"


def parse(text: str) -> Diagram:
    """Parse the line format and return a validated diagram."""
    crossings = []
    loops = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0].lower()
        if head == _LINE_CROSSING:
            if len(tok) != 7:
                raise DiagramSyntaxError(
                    lineno, f"expected 'crossing <id> <P|N|S|V> <s1_in> <s1_out> <s2_in> <s2_out>',"
                            f" got {len(tok) - 1} fields")
            try:
                cid = int(tok[1])
            except ValueError:
                raise DiagramSyntaxError(lineno, f"crossing id {tok[1]!r} is not an integer") from None
            try:
                kind = CrossingKind(tok[2].upper())
            except ValueError:
                raise DiagramSyntaxError(lineno, f"unknown crossing kind {tok[2]!r}") from None
            crossings.append(Crossing(cid, kind, *tok[3:7]))
        elif head in ("loops", "loop"):
            if len(tok) != 2 or not tok[1].isdigit():
                raise DiagramSyntaxError(lineno, "expected 'loops <count>'")
            if loops is not None:
                raise DiagramSyntaxError(lineno, "duplicate loops line")
            loops = int(tok[1])
        else:
            raise DiagramSyntaxError(lineno, f"unknown record {tok[0]!r}")
    return validate(Diagram(tuple(crossings), loops or 0))


def serialize(d: Diagram) -> str:
    lines = [f"crossing {x.id} {x.kind.value} {x.s1_in} {x.s1_out} {x.s2_in} {x.s2_out}"
             for x in d.crossings]
    if d.free_loops:
        lines.append(f"loops {d.free_loops}")
    return "\n".join(lines) + ("\n" if lines else "")


def counts(d: Diagram) -> Counts:
    c = s = v = w = 0
    for x in d.crossings:
        if x.kind.is_classical:
            c += 1
            w += x.kind.sign
        elif x.kind is S:
            s += 1
        else:
            v += 1
    return Counts(c, s, v, w)


def link_components(d: Diagram) -> int:
    """Number of closed curves when passing straight through every crossing."""
    nxt = _straight_successor(d)
    seen: set[str] = set()
    k = d.free_loops
    for start in sorted(nxt, key=arc_key):
        if start in seen:
            continue
        k += 1
        a = start
        while a not in seen:
            seen.add(a)
            a = nxt[a]
    return k


def component_arcs(d: Diagram) -> list[list[str]]:
    """Arcs of each link component in walk order (free loops omitted)."""
    nxt = _straight_successor(d)
    seen: set[str] = set()
    out = []
    for start in sorted(nxt, key=arc_key):
        if start in seen:
            continue
        comp = []
        a = start
        while a not in seen:
            seen.add(a)
            comp.append(a)
            a = nxt[a]
        out.append(comp)
    return out


def relabel(d: Diagram, arc_map: dict[str, str] | None = None, id_offset: int = 0,
            prefix: str = "") -> Diagram:
    """Rename arcs (by default to ``1..n`` in order of first appearance) and shift ids."""
    if arc_map is None:
        arc_map = {}
        for x in d.crossings:
            for a in x.ports:
                if a not in arc_map:
                    arc_map[a] = f"{prefix}{len(arc_map) + 1}"
    xs = tuple(Crossing(x.id + id_offset, x.kind, *(arc_map[a] for a in x.ports))
               for x in d.crossings)
    return Diagram(xs, d.free_loops)


def canonical(d: Diagram) -> Diagram:
    """Arc-relabeled normal form; two diagrams equal up to arc names have equal forms."""
    return relabel(d)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    r1 = relabel(d1, prefix="a")
    offset = (max(x.id for x in d1.crossings) + 1 - min(x.id for x in d2.crossings)
              if d1.crossings and d2.crossings else 0)
    r2 = relabel(d2, id_offset=max(offset, 0), prefix="b")
    return canonical(Diagram(r1.crossings + r2.crossings, d1.free_loops + d2.free_loops))


def union_all(diagrams: Iterable[Diagram]) -> Diagram:
    out = Diagram()
    for d in diagrams:
        out = disjoint_union(out, d)
    return out


def realization_graph(d: Diagram) -> nx.Graph:
    """Graph whose planarity is equivalent to drawing ``d`` in the plane.

    Each crossing becomes a wheel whose rim visits ``s1_in, s2_in, s1_out,
    s2_out``; a wheel is rigid up to reflection, so every planar embedding puts
    the two ends of each strand on opposite sides, i.e. the strands cross.
    """
    g = nx.Graph()
    for x in d.crossings:
        rim = [(x.id, "s1_in"), (x.id, "s2_in"), (x.id, "s1_out"), (x.id, "s2_out")]
        hub = (x.id, "hub")
        for i, node in enumerate(rim):
            g.add_edge(node, rim[(i + 1) % 4])
            g.add_edge(node, hub)
    for x in d.crossings:
        for arc, port in ((x.s1_out, "s1_out"), (x.s2_out, "s2_out")):
            head, strand = d.index["head"][arc]
            g.add_edge((x.id, port), ("arc", arc))
            g.add_edge(("arc", arc), (head.id, f"s{strand}_in"))
    return g


def is_realizable(d: Diagram) -> bool:
    """True if ``d`` can be drawn in the plane with exactly its virtual crossings."""
    planar, _ = nx.check_planarity(realization_graph(d))
    return planar
