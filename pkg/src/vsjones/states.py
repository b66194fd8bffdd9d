"""Resolution states and the magnetic graphs they produce.

Resolving a classical or singular crossing *oriented* reconnects
``s1_in -> s2_out`` and ``s2_in -> s1_out``.  Resolving it *disoriented*
joins the two incoming arcs at a sink and the two outgoing arcs at a source.
Virtual crossings are kept and passed straight through.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .diagram import Diagram


class Resolution(enum.Enum):
    ORIENTED = 0
    DISORIENTED = 1


@dataclass(frozen=True)
class State:
    """A resolution for every classical and singular crossing.

    ``mask`` bit ``i`` is set when the ``i``-th resolvable crossing (by id) is
    disoriented.
    """
    assignment: tuple[tuple[int, Resolution], ...]
    mask: int

    def __getitem__(self, cid: int) -> Resolution:
        for k, r in self.assignment:
            if k == cid:
                return r
        raise KeyError(cid)

    def as_dict(self) -> dict[int, Resolution]:
        return dict(self.assignment)

    def flipped(self, cid: int) -> "State":
        out = []
        mask = 0
        for i, (k, r) in enumerate(self.assignment):
            if k == cid:
                r = Resolution.ORIENTED if r is Resolution.DISORIENTED else Resolution.DISORIENTED
            mask |= r.value << i
            out.append((k, r))
        if not any(k == cid for k, _ in self.assignment):
            raise KeyError(cid)
        return State(tuple(out), mask)


def state_from_mask(d: Diagram, mask: int) -> State:
    ids = [x.id for x in d.resolvable()]
    if mask >> len(ids):
        raise ValueError(f"mask {mask:#b} has bits beyond {len(ids)} resolvable crossings")
    return State(tuple((cid, Resolution((mask >> i) & 1)) for i, cid in enumerate(ids)), mask)


def state_from_dict(d: Diagram, assignment: dict[int, Resolution]) -> State:
    mask = 0
    for i, x in enumerate(d.resolvable()):
        mask |= assignment[x.id].value << i
    return state_from_mask(d, mask)


def enumerate_states(d: Diagram) -> Iterator[State]:
    """All ``2**(c+s)`` states in binary-counter order."""
    m = len(d.resolvable())
    for mask in range(1 << m):
        yield state_from_mask(d, mask)


@dataclass(frozen=True)
class Edge:
    id: int
    component: int
    #: (arc, +1 forward | -1 backward) pieces in traversal order; empty for free loops
    pieces: tuple[tuple[str, int], ...]

    @property
    def arcs(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.pieces)


@dataclass(frozen=True)
class Vertex:
    crossing: int
    kind: str  # "sink" | "source"
    edges: tuple[int, int]


@dataclass(frozen=True)
class MagneticGraph:
    #: per component, the cyclic event sequence: ("arc", arc, dir), ("vertex", crossing, kind)
    #: or ("virtual", crossing)
    components: tuple[tuple[tuple, ...], ...]
    #: per component, its edge ids in traversal order
    component_edges: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    vertices: tuple[Vertex, ...]
    virtual_incidences: dict[int, tuple[int, int]]
    edge_of_arc: dict[str, int]

    @property
    def n_components(self) -> int:
        return len(self.components)

    def vertex_tags(self, comp: int) -> list[str]:
        return [ev[2] for ev in self.components[comp] if ev[0] == "vertex"]


def _step(d: Diagram, res: dict[int, Resolution], arc: str, direction: int):
    """Follow a dart through the crossing it runs into.

    Returns ``(next_arc, next_direction, event)`` where ``event`` describes the
    crossing passage, or ``None`` for an oriented smoothing.
    """
    if direction > 0:
        x, strand = d.index["head"][arc]
        other_in = x.s2_in if strand == 1 else x.s1_in
        other_out = x.s2_out if strand == 1 else x.s1_out
        same_out = x.s1_out if strand == 1 else x.s2_out
        if not x.kind.is_resolvable:
            return same_out, 1, ("virtual", x.id)
        if res[x.id] is Resolution.ORIENTED:
            return other_out, 1, None
        return other_in, -1, ("vertex", x.id, "sink")
    x, strand = d.index["tail"][arc]
    other_in = x.s2_in if strand == 1 else x.s1_in
    other_out = x.s2_out if strand == 1 else x.s1_out
    same_in = x.s1_in if strand == 1 else x.s2_in
    if not x.kind.is_resolvable:
        return same_in, -1, ("virtual", x.id)
    if res[x.id] is Resolution.ORIENTED:
        return other_in, -1, None
    return other_out, 1, ("vertex", x.id, "source")


def resolve(d: Diagram, st: State) -> MagneticGraph:
    res = st.as_dict()
    missing = [x.id for x in d.resolvable() if x.id not in res]
    if missing:
        raise KeyError(f"state has no resolution for crossings {missing}")

    cycles: list[list[tuple]] = []
    seen: set[str] = set()
    for start in d.arcs():
        if start in seen:
            continue
        events: list[tuple] = []
        arc, direction = start, 1
        while True:
            seen.add(arc)
            events.append(("arc", arc, direction))
            arc, direction, ev = _step(d, res, arc, direction)
            if ev is not None:
                events.append(ev)
            if arc == start and direction == 1:
                break
        cycles.append(events)

    components, comp_edges, edges, vertices = [], [], [], []
    edge_of_arc: dict[str, int] = {}
    for ci, events in enumerate(cycles):
        vpos = [i for i, ev in enumerate(events) if ev[0] == "vertex"]
        if vpos:
            # start right after a vertex so every run between vertices is one edge
            k = vpos[-1] + 1
            events = events[k:] + events[:k]
        runs: list[list[tuple[str, int]]] = [[]]
        vert_events = []
        for ev in events:
            if ev[0] == "arc":
                runs[-1].append((ev[1], ev[2]))
            elif ev[0] == "vertex":
                vert_events.append(ev)
                runs.append([])
        if vpos:
            runs.pop()  # the trailing empty run after the last vertex
        ids = []
        for run in runs:
            e = Edge(len(edges), ci, tuple(run))
            edges.append(e)
            ids.append(e.id)
            for a, _ in run:
                edge_of_arc[a] = e.id
        for j, ev in enumerate(vert_events):
            # vertex j sits between edge j and edge j+1 (cyclically)
            vertices.append(Vertex(ev[1], ev[2], (ids[j], ids[(j + 1) % len(ids)])))
        components.append(tuple(events))
        comp_edges.append(tuple(ids))

    for _ in range(d.free_loops):
        ci = len(components)
        e = Edge(len(edges), ci, ())
        edges.append(e)
        components.append(())
        comp_edges.append((e.id,))

    incid = {x.id: (edge_of_arc[x.s1_in], edge_of_arc[x.s2_in])
             for x in d.crossings if not x.kind.is_resolvable}
    return MagneticGraph(tuple(components), tuple(comp_edges), tuple(edges), tuple(vertices),
                         incid, edge_of_arc)


@dataclass(frozen=True)
class StateStats:
    a: int
    b: int
    alpha: int
    beta: int
    n_components: int
    parity: int


def stats(d: Diagram, st: State, g: MagneticGraph, parity: int) -> StateStats:
    a = b = alpha = beta = 0
    for x in d.resolvable():
        r = st[x.id]
        if x.kind.is_classical:
            # negative crossings count +1, positive -1
            delta = -x.kind.sign
            if r is Resolution.ORIENTED:
                a += delta
            else:
                b += delta
        elif r is Resolution.ORIENTED:
            alpha += 1
        else:
            beta += 1
    return StateStats(a, b, alpha, beta, g.n_components, parity)

