import pytest

from vsjones.battery import compare, run_battery
from vsjones.diagram import Diagram, counts, link_components, validate
from vsjones.evaluator import bracket, r_poly
from vsjones.fixtures import BUILTIN
from vsjones.laurent import DELTA, HLaurent
from vsjones.moves import (MOVE_NAMES, SameArc, UnknownArc, arc_tokens, builtin_fixture_pairs,
                           clasp_sites, insert_r1, insert_r2, insert_v1, insert_v2, kink_sites)

U = Diagram(free_loops=1)
TWO = Diagram(free_loops=2)


def test_r1_on_unknot():
    for sign in (1, -1):
        d = insert_r1(U, "@loop0", sign)
        assert counts(d).c == 1 and counts(d).w == sign
        assert d.free_loops == 0
        assert bracket(d) == DELTA


def test_v1_on_unknot():
    d = insert_v1(U, "@loop0")
    assert counts(d).v == 1
    assert r_poly(d) == HLaurent(DELTA)


def test_r2_and_v2_on_two_loops():
    for variant in ("parallel", "antiparallel"):
        d = insert_r2(TWO, "@loop0", "@loop1", variant)
        assert counts(d) == (2, 0, 0, 0)
        assert bracket(d) == DELTA ** 2
        d = insert_v2(TWO, "@loop0", "@loop1", variant)
        assert r_poly(d) == HLaurent(DELTA ** 2)


def test_example1_local_moves(ex1):
    before = r_poly(ex1)
    for arc in ex1.arcs():
        assert r_poly(insert_r1(ex1, arc, -1)) == before
        assert r_poly(insert_v1(ex1, arc)) == before


def test_arc_errors(ex1):
    with pytest.raises(UnknownArc):
        insert_r1(ex1, "nope")
    with pytest.raises(UnknownArc):
        insert_v1(ex1, "@loop0")
    with pytest.raises(UnknownArc):
        insert_v2(ex1, "1", "zz")
    with pytest.raises(SameArc):
        insert_r2(ex1, "1", "1")
    with pytest.raises(SameArc):
        insert_v2(ex1, "2", "2")
    with pytest.raises(ValueError):
        insert_r1(ex1, "1", 0)
    with pytest.raises(ValueError):
        insert_r2(ex1, "1", "2", "sideways")


def test_unknown_arc_is_a_key_error(ex1):
    with pytest.raises(KeyError):
        insert_r1(ex1, "nope")


def test_insertions_do_not_mutate(ex1):
    snapshot = str(ex1)
    insert_r2(ex1, "1", "5")
    assert str(ex1) == snapshot


def test_kinks_compose(ex1):
    d = ex1
    before = r_poly(ex1)
    for arc in ex1.arcs():
        d = insert_r1(d, arc, 1)
    assert counts(d).c == counts(ex1).c + len(ex1.arcs())
    assert r_poly(d) == before


def test_link_components_preserved(builtin):
    _, d = builtin
    k = link_components(d)
    for _, _, d2 in kink_sites(d):
        assert link_components(d2) == k
    for _, _, d2 in clasp_sites(d):
        assert link_components(d2) == k


def test_site_counts():
    d = BUILTIN["trefoil"]
    assert len(list(kink_sites(d))) == 3 * len(arc_tokens(d))
    assert sum(1 for _ in clasp_sites(U)) == 0


def test_builtin_pairs_cover_every_move():
    pairs = builtin_fixture_pairs()
    assert {p.name for p in pairs} == set(MOVE_NAMES)
    for p in pairs:
        validate(p.before)
        validate(p.after)
        assert p.before != p.after


@pytest.mark.parametrize("pair", builtin_fixture_pairs(), ids=lambda p: f"{p.name}:{p.note}")
def test_builtin_pair_invariance(pair):
    assert compare(pair.before, pair.after) == []


def test_compare_detects_change():
    assert "bracket" in compare(BUILTIN["hopf"], BUILTIN["trefoil"])
    assert compare(BUILTIN["unknot"], TWO) == ["bracket", "R", "psi", "k"]


def test_battery_single_move():
    reports = run_battery("V3s", n_random=0)
    assert list(reports) == ["V3s"] and reports["V3s"].ok


def test_battery_rejects_unknown_scope():
    with pytest.raises(ValueError):
        run_battery("R9")
