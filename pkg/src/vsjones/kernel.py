"""Vectorized per-state statistics for large state sums.

States are processed in blocks of consecutive masks.  Each arc contributes two
darts (forward, backward); a state fixes a successor permutation on darts,
whose cycles are the magnetic-graph components traversed one way or the other.
Cycle minima are found by pointer jumping.  Traversal direction relative to
the arc orientation flips exactly at bivalent vertices, so it is a valid
weight map; taking the cycle that holds the smallest dart puts +1 on the edge
with the smallest arc, the same rule as :func:`parity.canonical_weight_map`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .diagram import Diagram


@dataclass(frozen=True)
class Plan:
    n_darts: int
    free_loops: int
    base: np.ndarray          # successor for darts whose target does not depend on the state
    sources: np.ndarray       # (m, 4) darts routed by resolvable crossing i
    oriented: np.ndarray      # (m, 4) targets under the oriented resolution
    disoriented: np.ndarray   # (m, 4) targets under the disoriented resolution
    classical: np.ndarray     # indices (into 0..m-1) of classical crossings
    delta: np.ndarray         # +1 negative / -1 positive, aligned with ``classical``
    singular: np.ndarray
    virtual_arcs: np.ndarray  # (v, 2) arc indices of the two in-arcs of each virtual crossing

    @property
    def n_states(self) -> int:
        return 1 << len(self.sources)


def make_plan(d: Diagram) -> Plan:
    arcs = d.arcs()
    j = {a: i for i, a in enumerate(arcs)}

    def fwd(a):
        return 2 * j[a]

    def bwd(a):
        return 2 * j[a] + 1

    n = 2 * len(arcs)
    base = np.arange(n, dtype=np.int64)
    sources, ori, dis = [], [], []
    classical, delta, singular, virt = [], [], [], []
    for x in d.crossings:
        if not x.kind.is_resolvable:
            base[fwd(x.s1_in)] = fwd(x.s1_out)
            base[fwd(x.s2_in)] = fwd(x.s2_out)
            base[bwd(x.s1_out)] = bwd(x.s1_in)
            base[bwd(x.s2_out)] = bwd(x.s2_in)
            virt.append((j[x.s1_in], j[x.s2_in]))
            continue
        i = len(sources)
        sources.append((fwd(x.s1_in), fwd(x.s2_in), bwd(x.s1_out), bwd(x.s2_out)))
        ori.append((fwd(x.s2_out), fwd(x.s1_out), bwd(x.s2_in), bwd(x.s1_in)))
        dis.append((bwd(x.s2_in), bwd(x.s1_in), fwd(x.s2_out), fwd(x.s1_out)))
        if x.kind.is_classical:
            classical.append(i)
            delta.append(-x.kind.sign)
        else:
            singular.append(i)
    as2d = lambda rows, w: np.array(rows, dtype=np.int64).reshape(-1, w)  # noqa: E731
    return Plan(n, d.free_loops, base, as2d(sources, 4), as2d(ori, 4), as2d(dis, 4),
                np.array(classical, dtype=np.int64), np.array(delta, dtype=np.int64),
                np.array(singular, dtype=np.int64), as2d(virt, 2))


def tally(plan: Plan, lo: int, hi: int) -> Counter:
    """Count states with masks in ``[lo, hi)`` by ``(a, b, alpha, beta, n, parity)``."""
    masks = np.arange(lo, hi, dtype=np.int64)
    m = len(plan.sources)
    bits = (masks[:, None] >> np.arange(m, dtype=np.int64)) & 1
    B = len(masks)

    cb = bits[:, plan.classical]
    a = (1 - cb) @ plan.delta if len(plan.classical) else np.zeros(B, dtype=np.int64)
    b = cb @ plan.delta if len(plan.classical) else np.zeros(B, dtype=np.int64)
    beta = bits[:, plan.singular].sum(axis=1)
    alpha = len(plan.singular) - beta

    if plan.n_darts == 0:
        ncomp = np.full(B, plan.free_loops, dtype=np.int64)
        par = np.ones(B, dtype=np.int64)
    else:
        dtype = np.int16 if plan.n_darts < 2 ** 15 else np.int32
        succ = np.broadcast_to(plan.base.astype(dtype), (B, plan.n_darts)).copy()
        for i in range(m):
            on = bits[:, i].astype(bool)[:, None]
            succ[:, plan.sources[i]] = np.where(on, plan.disoriented[i], plan.oriented[i])
        low = np.broadcast_to(np.arange(plan.n_darts, dtype=dtype), succ.shape).copy()
        jump = succ
        steps = max(1, int(np.ceil(np.log2(plan.n_darts))))
        for _ in range(steps):
            np.minimum(low, np.take_along_axis(low, jump, axis=1), out=low)
            jump = np.take_along_axis(jump, jump, axis=1)
        leaders = (low == np.arange(plan.n_darts, dtype=dtype)).sum(axis=1)
        ncomp = leaders // 2 + plan.free_loops
        if len(plan.virtual_arcs):
            backward = low[:, 0::2] > low[:, 1::2]  # arc traversed against its orientation
            flips = backward[:, plan.virtual_arcs[:, 0]] ^ backward[:, plan.virtual_arcs[:, 1]]
            par = 1 - 2 * (flips.sum(axis=1) & 1)
        else:
            par = np.ones(B, dtype=np.int64)

    keys = np.stack([a, b, alpha, beta, ncomp, par], axis=1).astype(np.int64)
    uniq, cnt = np.unique(keys, axis=0, return_counts=True)
    return Counter({tuple(int(v) for v in row): int(c) for row, c in zip(uniq, cnt)})
