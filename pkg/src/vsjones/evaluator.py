"""State-sum evaluation of the bracket, the enhanced polynomial R and its split.

``R(D) = (-1)^c * sum_S A^(2a+4b) * d^(alpha+||S||) * d4^beta * h^((1-i)/2)`` with
``d = -A^2 - A^-2`` and ``d4 = -A^4 - A^-4``; the bracket is ``R`` at ``h = 1``.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .diagram import N, P, S, Diagram, counts, link_components
from .kernel import make_plan, tally
from .laurent import DELTA, DELTA4, ZERO, HLaurent, LaurentPoly, eval_h1
from .parity import canonical_weight_map, parity
from .states import MagneticGraph, State, StateStats, enumerate_states, resolve, stats

DEFAULT_MAX_STATES = 1 << 20
BLOCK = 1 << 15


class EvaluationError(ValueError):
    pass


class StateBudgetExceeded(EvaluationError):
    pass


class UnknownCrossing(EvaluationError, KeyError):
    pass


class NotSingular(EvaluationError):
    pass


@dataclass(frozen=True)
class InvariantResult:
    bracket: LaurentPoly
    r_poly: HLaurent
    phi: LaurentPoly
    psi: LaurentPoly
    k: int
    state_count: int


@lru_cache(maxsize=4096)
def _contribution(a: int, b: int, alpha: int, beta: int, n: int, par: int) -> HLaurent:
    poly = (DELTA ** (alpha + n) * DELTA4 ** beta).shift(2 * a + 4 * b)
    return HLaurent(ZERO, poly) if par == -1 else HLaurent(poly, ZERO)


def state_contribution(st: StateStats) -> HLaurent:
    """Weighted contribution of one state, before the global ``(-1)^c`` sign."""
    if st.parity not in (1, -1):
        raise ValueError(f"parity must be +1 or -1, got {st.parity}")
    return _contribution(st.a, st.b, st.alpha, st.beta, st.n_components, st.parity)


def max_A(st: StateStats) -> int:
    """Top power of ``A`` in the state contribution."""
    return 2 * st.a + 4 * st.b + 2 * (st.alpha + st.n_components) + 4 * st.beta


@dataclass(frozen=True)
class StateRow:
    state: State
    graph: MagneticGraph
    stats: StateStats
    contribution: HLaurent


def state_table(d: Diagram) -> Iterator[StateRow]:
    """Per-state rows built from explicit magnetic graphs, in mask order."""
    for st in enumerate_states(d):
        g = resolve(d, st)
        s = stats(d, st, g, parity(g, canonical_weight_map(g)))
        yield StateRow(st, g, s, state_contribution(s))


def _check_budget(d: Diagram, max_states: int | None) -> int:
    n = 1 << len(d.resolvable())
    if max_states is not None and n > max_states:
        raise StateBudgetExceeded(f"diagram has {n} states, budget is {max_states}")
    return n


def _tally_block(args):
    plan, lo, hi = args
    return tally(plan, lo, hi)


def state_tally(d: Diagram, workers: int | None = None,
                max_states: int | None = DEFAULT_MAX_STATES) -> Counter:
    """Map-reduce over all states: count them by their statistics."""
    n = _check_budget(d, max_states)
    plan = make_plan(d)
    blocks = [(plan, lo, min(lo + BLOCK, n)) for lo in range(0, n, BLOCK)]
    if workers is None:
        workers = os.cpu_count() or 1
    total: Counter = Counter()
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(blocks))) as pool:
            for part in pool.map(_tally_block, blocks):
                total.update(part)
    else:
        for blk in blocks:
            total.update(_tally_block(blk))
    return total


def _assert_even(p: LaurentPoly, what: str) -> None:
    odd = [e for e, _ in p.items() if e % 2]
    assert not odd, f"{what} has odd powers of A: {odd}"


def r_poly(d: Diagram, workers: int | None = None,
           max_states: int | None = DEFAULT_MAX_STATES) -> HLaurent:
    total = HLaurent()
    for key, cnt in state_tally(d, workers, max_states).items():
        total = total + _contribution(*key) * cnt
    if counts(d).c % 2:
        total = -total
    _assert_even(total.even, "psi")
    _assert_even(total.odd, "phi")
    return total


def r_poly_reference(d: Diagram, max_states: int | None = DEFAULT_MAX_STATES) -> HLaurent:
    """``R`` summed over :func:`state_table` rows; slow, used to cross-check the kernel."""
    _check_budget(d, max_states)
    total = HLaurent()
    for row in state_table(d):
        total = total + row.contribution
    return -total if counts(d).c % 2 else total


def bracket(d: Diagram, **kw) -> LaurentPoly:
    return eval_h1(r_poly(d, **kw))


def split(d: Diagram, **kw) -> tuple[LaurentPoly, LaurentPoly]:
    """``(phi, psi)`` with ``R = phi*h + psi``."""
    r = r_poly(d, **kw)
    return r.odd, r.even


def invariants(d: Diagram, **kw) -> InvariantResult:
    r = r_poly(d, **kw)
    br = eval_h1(r)
    _assert_even(br, "bracket")
    return InvariantResult(br, r, r.odd, r.even, link_components(d), 1 << len(d.resolvable()))


def check_singular_identity(d: Diagram, cid: int) -> bool:
    """Singular crossing = positive + negative, for both the bracket and R."""
    try:
        x = d.crossing(cid)
    except KeyError:
        raise UnknownCrossing(f"no crossing with id {cid}") from None
    if x.kind is not S:
        raise NotSingular(f"crossing {cid} is {x.kind.name.lower()}, not singular")
    pos, neg = d.replace(cid, P), d.replace(cid, N)
    r, rp, rn = r_poly(d), r_poly(pos), r_poly(neg)
    return r == rp + rn and eval_h1(r) == eval_h1(rp) + eval_h1(rn)

