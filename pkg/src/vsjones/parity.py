"""Weight maps on magnetic-graph edges and the parity of a state."""
from __future__ import annotations

import random

from .diagram import arc_key
from .states import MagneticGraph

WeightMap = dict[int, int]


def _base_edge(g: MagneticGraph, comp: int) -> int:
    edges = g.component_edges[comp]
    best, best_key = edges[0], None
    for eid in edges:
        for a in g.edges[eid].arcs:
            if best_key is None or arc_key(a) < best_key:
                best, best_key = eid, arc_key(a)
    return best


def _alternate(g: MagneticGraph, comp: int, base: int, sign: int) -> WeightMap:
    edges = g.component_edges[comp]
    i0 = edges.index(base)
    return {eid: sign * (-1) ** ((i - i0) % len(edges)) for i, eid in enumerate(edges)}


def canonical_weight_map(g: MagneticGraph) -> WeightMap:
    """Per component, the edge holding the smallest arc gets +1; weights then alternate."""
    w: WeightMap = {}
    for comp in range(g.n_components):
        w.update(_alternate(g, comp, _base_edge(g, comp), 1))
    return w


def random_weight_map(g: MagneticGraph, seed: int) -> WeightMap:
    rng = random.Random(seed)
    w: WeightMap = {}
    for comp in range(g.n_components):
        w.update(_alternate(g, comp, _base_edge(g, comp), rng.choice((1, -1))))
    return w


def is_weight_map(g: MagneticGraph, w: WeightMap) -> bool:
    if set(w) != {e.id for e in g.edges}:
        return False
    if any(w[e] not in (1, -1) for e in w):
        return False
    return all(w[v.edges[0]] != w[v.edges[1]] for v in g.vertices)


def parity(g: MagneticGraph, w: WeightMap | None = None) -> int:
    """Product over virtual crossings of the weights of the two edges meeting there."""
    if w is None:
        w = canonical_weight_map(g)
    p = 1
    for e1, e2 in g.virtual_incidences.values():
        p *= w[e1] * w[e2]
    return p


def inter_component_crossings(g: MagneticGraph) -> dict[tuple[int, int], int]:
    """Number of virtual crossings between each pair of distinct components."""
    out: dict[tuple[int, int], int] = {}
    for e1, e2 in g.virtual_incidences.values():
        c1, c2 = sorted((g.edges[e1].component, g.edges[e2].component))
        if c1 != c2:
            out[(c1, c2)] = out.get((c1, c2), 0) + 1
    return out


def is_parity_well_defined(g: MagneticGraph) -> bool:
    """Parity ignores the weight map iff each component meets the others evenly often."""
    per_comp = [0] * g.n_components
    for (c1, c2), n in inter_component_crossings(g).items():
        per_comp[c1] += n
        per_comp[c2] += n
    return all(n % 2 == 0 for n in per_comp)
