import pytest
from hypothesis import given, settings, strategies as st

from vsjones.diagram import CrossingKind, Diagram, disjoint_union, link_components
from vsjones.evaluator import (NotSingular, StateBudgetExceeded, UnknownCrossing, bracket,
                               check_singular_identity, invariants, max_A, r_poly,
                               r_poly_reference, split, state_contribution, state_table,
                               state_tally)
from vsjones.fixtures import BUILTIN, random_diagram
from vsjones.laurent import DELTA, DELTA4, ONE, HLaurent, LaurentPoly, eval_h1, exponent_residues
from vsjones.skein import bracket_skein
from vsjones.states import StateStats

L = LaurentPoly
EX1_BRACKET = L({12: 1, 6: -1, 4: -1, 2: -2, -2: -1})
EX1_PHI = L({12: 1, 4: -1})
EX1_PSI = L({6: -1, 2: -2, -2: -1})


def test_example1_values(ex1):
    assert bracket(ex1) == EX1_BRACKET
    assert split(ex1) == (EX1_PHI, EX1_PSI)
    assert r_poly(ex1) == HLaurent(EX1_PSI, EX1_PHI)


def test_example1_contributions(ex1):
    h = HLaurent.h()
    want = [
        HLaurent(L.monomial(2) * DELTA ** 2),
        h * HLaurent(L.monomial(4) * DELTA ** 2),
        h * HLaurent(L.monomial(2) * DELTA * DELTA4),
        h * HLaurent(L.monomial(4) * DELTA ** 2 * DELTA4),
    ]
    assert [r.contribution for r in state_table(ex1)] == want


def test_state_contribution_examples():
    assert state_contribution(StateStats(0, 0, 0, 0, 1, 1)) == HLaurent(DELTA)
    s2 = StateStats(0, 1, 1, 0, 1, -1)
    assert state_contribution(s2) == HLaurent.h() * HLaurent(L.monomial(4) * DELTA ** 2)
    with pytest.raises(ValueError):
        state_contribution(StateStats(0, 0, 0, 0, 1, 0))


def test_max_A_examples():
    assert max_A(StateStats(1, 0, 1, 0, 1, 1)) == 6
    assert max_A(StateStats(0, 0, 0, 0, 1, 1)) == 2


def test_max_A_is_top_degree(ex1):
    for r in state_table(ex1):
        top = r.contribution.even if r.stats.parity == 1 else r.contribution.odd
        assert top.degree() == max_A(r.stats)


@pytest.mark.parametrize("name", [n for n, d in BUILTIN.items() if d.resolvable()])
def test_all_oriented_state_top_power(name):
    d = BUILTIN[name]
    first = next(iter(state_table(d)))
    assert max_A(first.stats) % 4 == (2 * link_components(d)) % 4


@pytest.mark.parametrize("name, value", [
    ("unknot", DELTA),
    ("kink-positive", DELTA),
    ("kink-negative", DELTA),
    ("kink-virtual", DELTA),
    ("hopf", L({0: 1, -4: 1, -8: 1, -12: 1})),
    ("trefoil", L({-2: -1, -6: -1, -10: -1, -18: 1})),
    ("singular-hopf", L({4: 1, 0: 3, -4: 2, -8: 1, -12: 1})),
])
def test_builtin_brackets(name, value):
    assert bracket(BUILTIN[name]) == value


def test_virtual_trefoil_splits():
    phi, psi = split(BUILTIN["virtual-trefoil"])
    assert phi == L({-4: -1, -12: 1})
    assert psi == L({-2: -1, -6: -1})


def test_empty_diagram_is_one():
    assert r_poly(Diagram()) == HLaurent(ONE)
    assert bracket_skein(Diagram()) == ONE


def test_invariants_record(ex1):
    res = invariants(ex1)
    assert res.k == 1 and res.state_count == 4
    assert res.bracket == eval_h1(res.r_poly)
    assert res.r_poly == HLaurent(res.psi, res.phi)


def test_budget(ex1):
    with pytest.raises(StateBudgetExceeded):
        r_poly(ex1, max_states=2)
    with pytest.raises(StateBudgetExceeded):
        r_poly_reference(ex1, max_states=3)
    assert r_poly(ex1, max_states=None) == r_poly(ex1)


def test_worker_pool_matches_inline():
    # five crossings is 32 states; shrink the block so the pool sees several blocks
    import vsjones.evaluator as ev
    d = random_diagram(7, max_cs=6)
    old = ev.BLOCK
    try:
        ev.BLOCK = 4
        assert state_tally(d, workers=2) == state_tally(d, workers=1)
    finally:
        ev.BLOCK = old


def test_singular_identity(ex1):
    assert check_singular_identity(ex1, 2)
    assert check_singular_identity(BUILTIN["singular-hopf"], 1)
    with pytest.raises(NotSingular):
        check_singular_identity(ex1, 3)
    with pytest.raises(NotSingular):
        check_singular_identity(ex1, 1)
    with pytest.raises(UnknownCrossing):
        check_singular_identity(ex1, 42)


def test_unknot_multiplicativity(ex1):
    u = disjoint_union(ex1, Diagram(free_loops=1))
    assert bracket(u) == DELTA * bracket(ex1)
    assert r_poly(u) == HLaurent(DELTA) * r_poly(ex1)


def test_skein_example1(ex1):
    assert bracket_skein(ex1) == EX1_BRACKET


def test_skein_builtins(builtin):
    _, d = builtin
    assert bracket_skein(d) == bracket(d)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_kernel_reference_and_skein_agree(seed):
    d = random_diagram(seed)
    r = r_poly(d)
    assert r == r_poly_reference(d)
    assert eval_h1(r) == bracket_skein(d)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_splitting_bands(seed):
    d = random_diagram(seed)
    k = link_components(d)
    phi, psi = split(d)
    assert exponent_residues(phi) <= {(2 * (k - 1)) % 4}
    assert exponent_residues(psi) <= {(2 * k) % 4}


def test_mirror_inverts_A():
    tref = BUILTIN["trefoil"]
    mirror = tref
    for x in tref.crossings:
        mirror = mirror.replace(x.id, CrossingKind.NEGATIVE)
    b, bm = bracket(tref), bracket(mirror)
    assert bm == L({-e: c for e, c in b.items()})
